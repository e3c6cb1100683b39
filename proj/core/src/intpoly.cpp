#include "coxalg/intpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace coxalg {

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<Int> coeffs) : c_(coeffs) { trim(); }

IntPoly IntPoly::constant(Int a) {
  IntPoly p;
  if (a != 0) p.c_.push_back(std::move(a));
  return p;
}

IntPoly IntPoly::monomial(Int a, std::size_t k) {
  IntPoly p;
  if (a != 0) {
    p.c_.assign(k + 1, Int(0));
    p.c_[k] = std::move(a);
  }
  return p;
}

IntPoly IntPoly::variable() { return monomial(1, 1); }

const Int& IntPoly::leading() const {
  if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
  return c_.back();
}

Int IntPoly::coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Int(0); }

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Int(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Int(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& o) {
  *this = *this * o;
  return *this;
}

IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  std::vector<Int> out(ac.size() + bc.size() - 1, Int(0));
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) out[i + j] += ac[i] * bc[j];
  }
  return IntPoly(std::move(out));
}

IntPoly operator*(const Int& s, const IntPoly& a) {
  if (s == 0) return {};
  std::vector<Int> out = a.coeffs();
  for (auto& x : out) x *= s;
  return IntPoly(std::move(out));
}

Int IntPoly::eval(const Int& x) const {
  Int r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

Rat IntPoly::eval(const Rat& x) const {
  Rat r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = r * x + Rat(c_[i]);
  return r;
}

int IntPoly::sign_at(const Rat& x) const {
  Rat v = eval(x);
  if (v > 0) return 1;
  if (v < 0) return -1;
  return 0;
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Int> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = Int(i) * c_[i];
  return IntPoly(std::move(out));
}

IntPoly IntPoly::reversed() const {
  std::vector<Int> out(c_.rbegin(), c_.rend());
  return IntPoly(std::move(out));
}

IntPoly IntPoly::pow(unsigned e) const {
  IntPoly r = constant(1);
  IntPoly base = *this;
  while (e) {
    if (e & 1u) r *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return r;
}

Int IntPoly::content() const {
  Int g = 0;
  for (const auto& x : c_) g = boost::multiprecision::gcd(g, x);
  if (g < 0) g = -g;
  return g;
}

IntPoly IntPoly::primitive() const {
  if (is_zero()) return {};
  Int g = content();
  std::vector<Int> out = c_;
  for (auto& x : out) x /= g;
  return IntPoly(std::move(out));
}

std::string IntPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Int& a = c_[i];
    if (a == 0) continue;
    Int mag = a < 0 ? Int(-a) : a;
    if (first) {
      if (a < 0) os << "-";
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    if (i == 0) {
      os << mag;
    } else {
      if (mag != 1) os << mag;
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<IntPoly, IntPoly> divrem_monic(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero() || b.leading() != 1)
    throw std::invalid_argument("divrem_monic requires a monic divisor");
  if (a.degree() < b.degree()) return {IntPoly{}, a};
  std::vector<Int> rem = a.coeffs();
  const auto& bc = b.coeffs();
  std::size_t db = bc.size() - 1;
  std::vector<Int> quo(rem.size() - db, Int(0));
  for (std::size_t i = rem.size(); i-- > db;) {
    Int q = rem[i];
    if (q == 0) continue;
    quo[i - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= q * bc[j];
  }
  return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

bool try_exact_divide(const IntPoly& a, const IntPoly& b, IntPoly& q) {
  if (b.is_zero()) return false;
  if (a.is_zero()) {
    q = IntPoly{};
    return true;
  }
  auto [rq, rr] = divrem(RatPoly(a), RatPoly(b));
  if (!rr.is_zero()) return false;
  for (const auto& c : rq.coeffs())
    if (boost::multiprecision::denominator(c) != 1) return false;
  std::vector<Int> out;
  out.reserve(rq.coeffs().size());
  for (const auto& c : rq.coeffs()) out.push_back(boost::multiprecision::numerator(c));
  q = IntPoly(std::move(out));
  return true;
}

IntPoly exact_divide(const IntPoly& a, const IntPoly& b) {
  IntPoly q;
  if (!try_exact_divide(a, b, q)) throw std::invalid_argument("exact_divide: not divisible");
  return q;
}

IntPoly poly_gcd(IntPoly a, IntPoly b) {
  if (a.is_zero() && b.is_zero()) return {};
  RatPoly u{a}, v{b};
  while (!v.is_zero()) {
    auto [q, r] = divrem(u, v);
    (void)q;
    u = v;
    // normalize to keep coefficient sizes flat; a positive rational scalar
    // does not change the gcd
    v = r.is_zero() ? RatPoly{} : RatPoly(r.primitive_integer());
  }
  IntPoly g = u.primitive_integer();
  if (!g.is_zero() && g.leading() < 0) g = -g;
  return g;
}

IntPoly squarefree_part(const IntPoly& f) {
  if (f.is_zero()) return {};
  if (f.degree() == 0) return IntPoly::constant(1);
  IntPoly g = poly_gcd(f, f.derivative());
  IntPoly sf = exact_divide(f.primitive(), g).primitive();
  if (sf.leading() < 0) sf = -sf;
  return sf;
}

std::vector<IntPoly> squarefree_decomposition(const IntPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree decomposition of zero");
  std::vector<IntPoly> out;
  IntPoly p = f.primitive();
  if (p.leading() < 0) p = -p;
  if (p.degree() == 0) return out;
  IntPoly a = poly_gcd(p, p.derivative());
  IntPoly b = exact_divide(p, a);            // product of distinct factors
  IntPoly c = exact_divide(p.derivative(), a);
  IntPoly d = c - b.derivative();
  while (b.degree() > 0) {
    IntPoly g = poly_gcd(b, d);
    out.push_back(g);
    b = exact_divide(b, g);
    c = exact_divide(d, g);
    d = c - b.derivative();
  }
  return out;
}

// --- RatPoly ---

void RatPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly::RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

RatPoly::RatPoly(const IntPoly& p) {
  c_.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c_.emplace_back(x);
}

const Rat& RatPoly::leading() const {
  if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
  return c_.back();
}

Rat RatPoly::coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rat> out(c_.size() + o.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  }
  return RatPoly(std::move(out));
}

Rat RatPoly::eval(const Rat& x) const {
  Rat r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

IntPoly RatPoly::primitive_integer() const {
  if (is_zero()) return {};
  Int den_lcm = 1;
  for (const auto& c : c_) {
    Int d = boost::multiprecision::denominator(c);
    den_lcm = boost::multiprecision::lcm(den_lcm, d);
  }
  std::vector<Int> ints;
  ints.reserve(c_.size());
  for (const auto& c : c_) {
    Rat scaled = c * Rat(den_lcm);
    ints.push_back(boost::multiprecision::numerator(scaled));
  }
  return IntPoly(std::move(ints)).primitive();
}

std::pair<RatPoly, RatPoly> divrem(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPoly{}, a};
  std::vector<Rat> rem(a.coeffs());
  const auto& bc = b.coeffs();
  std::size_t db = bc.size() - 1;
  const Rat& lead = bc.back();
  std::vector<Rat> quo(rem.size() - db, Rat(0));
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    Rat q = rem[i] / lead;
    quo[i - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= q * bc[j];
  }
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

}  // namespace coxalg
