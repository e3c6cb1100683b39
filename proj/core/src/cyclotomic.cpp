#include "coxalg/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace coxalg {

IntPoly v_poly(unsigned n) {
  if (n == 0) throw std::invalid_argument("v_poly(0)");
  return IntPoly(std::vector<Int>(n, Int(1)));
}

namespace {

std::vector<std::pair<unsigned, unsigned>> factorize(unsigned n) {
  std::vector<std::pair<unsigned, unsigned>> fs;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    fs.emplace_back(p, e);
  }
  if (n > 1) fs.emplace_back(n, 1u);
  return fs;
}

}  // namespace

int mobius(unsigned n) {
  if (n == 0) throw std::invalid_argument("mobius(0)");
  int sign = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

unsigned totient(unsigned n) {
  if (n == 0) throw std::invalid_argument("totient(0)");
  unsigned r = n;
  for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
  return r;
}

std::vector<unsigned> divisors(unsigned n) {
  if (n == 0) throw std::invalid_argument("divisors(0)");
  std::vector<unsigned> small, large;
  for (unsigned d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

const IntPoly& cyclotomic(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomic(0)");
  static std::map<unsigned, IntPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  IntPoly phi;
  if (n == 1) {
    phi = IntPoly{-1, 1};  // T - 1
  } else {
    // phi_n = prod_{d | n} v_{n/d}^{mobius(d)}, valid for n >= 2
    IntPoly num = IntPoly::constant(1), den = IntPoly::constant(1);
    for (unsigned d : divisors(n)) {
      int mu_d = mobius(d);
      if (mu_d == 1)
        num *= v_poly(n / d);
      else if (mu_d == -1)
        den *= v_poly(n / d);
    }
    auto [q, r] = divrem_monic(num, den);
    if (!r.is_zero()) throw std::logic_error("cyclotomic product failed to divide");
    phi = std::move(q);
  }
  return cache.emplace(n, std::move(phi)).first->second;
}

IntPoly CycloFactorization::reconstruct() const {
  IntPoly out = remainder.is_zero() ? IntPoly::constant(1) : remainder;
  for (auto [n, e] : factors) out *= cyclotomic(n).pow(e);
  return out;
}

unsigned CycloFactorization::multiplicity(unsigned index) const {
  for (auto [n, e] : factors)
    if (n == index) return e;
  return 0;
}

std::string CycloFactorization::str() const {
  std::ostringstream os;
  bool first = true;
  for (auto [n, e] : factors) {
    if (!first) os << " ";
    first = false;
    os << "phi_" << n;
    if (e > 1) os << "^" << e;
  }
  if (!fully_cyclotomic()) {
    if (!first) os << " ";
    os << "(" << remainder.str() << ")";
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

CycloFactorization factor_cyclotomic(const IntPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("factoring the zero polynomial");
  CycloFactorization out;
  IntPoly rem = f;
  for (unsigned n = 1;; ++n) {
    unsigned deg = static_cast<unsigned>(rem.degree());
    if (deg == 0) break;
    // any root of rem is a root of f, so indices with totient above deg
    // cannot divide; totient(n) >= sqrt(n/2) bounds the search
    if (static_cast<unsigned long long>(n) > 2ull * deg * deg + 1ull) break;
    if (totient(n) > deg) continue;
    const IntPoly& phi = cyclotomic(n);
    unsigned e = 0;
    for (;;) {
      auto [q, r] = divrem_monic(rem, phi);
      if (!r.is_zero()) break;
      rem = std::move(q);
      ++e;
    }
    if (e) out.factors.emplace_back(n, e);
  }
  out.remainder = std::move(rem);
  return out;
}

IntPoly cyclotomic_product(const std::vector<std::pair<unsigned, unsigned>>& factors) {
  IntPoly out = IntPoly::constant(1);
  for (auto [n, e] : factors) out *= cyclotomic(n).pow(e);
  return out;
}

}  // namespace coxalg
