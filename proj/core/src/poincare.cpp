#include "coxalg/poincare.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "coxalg/coxeter.hpp"

namespace coxalg {

namespace {

IntPoly one_minus_power(unsigned e) {
  std::vector<Int> c(e + 1, Int(0));
  c[0] = 1;
  c[e] = -1;
  return IntPoly(std::move(c));
}

void require_wild(const WeightSequence& p, const char* what) {
  if (classify(p) != ReprType::Wild)
    throw std::invalid_argument(std::string(what) + " is defined for wild weights only");
}

std::vector<Int> integer_series(const RatFunc& f, std::size_t n) {
  std::vector<Rat> s = f.series(n);
  std::vector<Int> out;
  out.reserve(s.size());
  for (const auto& a : s) {
    if (boost::multiprecision::denominator(a) != 1)
      throw std::logic_error("series coefficient fails to be an integer");
    out.push_back(boost::multiprecision::numerator(a));
  }
  return out;
}

}  // namespace

RatFunc poincare_closed(const WeightSequence& p) {
  IntPoly t = IntPoly::variable();
  IntPoly omt = one_minus_power(1);  // 1 - T
  RatFunc sum{t};
  sum = sum + RatFunc(IntPoly::constant(1), omt);
  sum = sum + RatFunc(Int(p.t() - 2) * t, omt * omt);
  for (unsigned pi : p.parts()) sum = sum - RatFunc(t, omt * one_minus_power(pi));
  return sum;
}

RatFunc poincare_via_coxeter(const WeightSequence& p) {
  return RatFunc(extended_coxeter_poly(p), canonical_coxeter_poly(p));
}

RatFunc poincare_via_star(const WeightSequence& p) {
  return RatFunc(IntPoly{1, 1}) -
         RatFunc(IntPoly::variable() * star_coxeter_poly(p), canonical_coxeter_poly(p));
}

namespace {

struct MonoidScan {
  std::vector<bool> member;  // member[k] for 0 <= k <= n
  std::vector<unsigned> support;
};

MonoidScan scan_support(const RatFunc& series, std::size_t n) {
  std::vector<Int> coeffs = integer_series(series, n);
  if (coeffs[0] != 1) throw std::logic_error("series fails to start at 1");
  if (coeffs[1] != 0) throw std::logic_error("series has a degree-one term");
  MonoidScan scan;
  scan.member.assign(n + 1, false);
  scan.member[0] = true;
  for (std::size_t k = 1; k <= n; ++k) {
    if (coeffs[k] < 0) throw std::logic_error("series has a negative coefficient");
    if (coeffs[k] != 0) {
      scan.member[k] = true;
      scan.support.push_back(static_cast<unsigned>(k));
    }
  }
  return scan;
}

}  // namespace

NumericalSemigroup support_monoid(const WeightSequence& p) {
  require_wild(p, "the support monoid");
  RatFunc series = poincare_closed(p);
  std::size_t n = std::max<std::size_t>(
      200, 6 * static_cast<std::size_t>(3 + p.sum_minus_t()));

  for (unsigned attempt = 0; attempt < 3; ++attempt, n *= 2) {
    MonoidScan scan = scan_support(series, n);
    const auto& member = scan.member;
    const auto& support = scan.support;
    if (support.empty()) throw std::logic_error("empty series support");

    for (std::size_t i = 0; i < support.size(); ++i)
      for (std::size_t j = i; j < support.size(); ++j) {
        std::size_t s = std::size_t(support[i]) + support[j];
        if (s <= n && !member[s])
          throw std::logic_error("series support fails to be additively closed");
      }

    NumericalSemigroup monoid;
    for (unsigned s : support) {
      bool decomposable = false;
      for (unsigned a : support) {
        if (2 * a > s) break;
        if (member[s - a]) {
          decomposable = true;
          break;
        }
      }
      if (!decomposable) monoid.generators.push_back(s);
    }
    if (monoid.generators.size() > 6)
      throw std::logic_error("support monoid needs more than six generators");
    unsigned g = 0;
    for (unsigned v : monoid.generators) g = std::gcd(g, v);
    if (g != 1) throw std::logic_error("support monoid generators fail to be coprime");

    unsigned frob = 0;
    for (std::size_t k = n + 1; k-- > 1;)
      if (!member[k]) {
        frob = static_cast<unsigned>(k);
        break;
      }
    // certificate: a full run of min-generator consecutive members after the
    // gap proves every later value is a member too
    unsigned step = monoid.generators.front();
    bool certified = frob + step <= n;
    for (unsigned x = frob + 1; certified && x <= frob + step; ++x)
      if (!member[x]) certified = false;
    if (!certified) continue;  // horizon too short, retry with a larger one

    monoid.frobenius = frob;
    monoid.conductor = frob + 1;
    return monoid;
  }
  throw std::logic_error("support horizon exhausted without a Frobenius certificate");
}

std::optional<GeneratedForm> formal_decomposition(const WeightSequence& p, unsigned n_max) {
  require_wild(p, "the formal decomposition");
  if (!roots_on_circle(p)) return std::nullopt;

  IntPoly f_hat = extended_coxeter_poly(p);
  IntPoly f_c = canonical_coxeter_poly(p);
  RatFunc g(f_hat, f_c);
  GeneratedForm form;

  long guard = 4 * (f_hat.degree() + f_c.degree()) + 64;
  while (guard-- > 0) {
    IntPoly diff = g.num() - g.den();
    if (diff.is_zero()) break;
    std::size_t e = 0;
    while (diff.coeff(e) == 0) ++e;
    if (e < 2) throw std::logic_error("decomposition residual deviates below degree two");
    // sign of the leading series deviation of g - 1
    Rat coef = Rat(diff.coeff(e)) / Rat(g.den().coeff(0));
    if (coef > 0) {
      form.d.push_back(static_cast<unsigned>(e));
      if (form.d.size() > n_max) return std::nullopt;
      g = RatFunc(g.num() * one_minus_power(static_cast<unsigned>(e)), g.den());
    } else {
      form.c.push_back(static_cast<unsigned>(e));
      g = RatFunc(g.num(), g.den() * one_minus_power(static_cast<unsigned>(e)));
    }
  }
  if (guard <= 0) throw std::logic_error("decomposition failed to terminate");

  std::sort(form.d.begin(), form.d.end());
  std::sort(form.c.begin(), form.c.end());
  if (form.d.size() < 3 || form.c.size() + 2 != form.d.size())
    throw std::logic_error("decomposition shape violates n - 2 relations");
  unsigned long sd = 1, sc = 0;
  for (unsigned v : form.d) sd += v;
  for (unsigned v : form.c) sc += v;
  if (sd != sc) throw std::logic_error("decomposition degree identity fails");

  RatFunc check{IntPoly::constant(1)};
  for (unsigned v : form.c) check = check * RatFunc(one_minus_power(v));
  for (unsigned v : form.d) check = check / RatFunc(one_minus_power(v));
  if (!(check == poincare_closed(p)))
    throw std::logic_error("decomposition fails to reconstruct the series");
  return form;
}

bool is_complete_intersection_formal(const WeightSequence& p) {
  require_wild(p, "the complete intersection test");
  return factor_cyclotomic(extended_coxeter_poly(p)).fully_cyclotomic();
}

bool three_generated(const WeightSequence& p) {
  auto form = formal_decomposition(p);
  return form && form->d.size() == 3;
}

PoincareProfile poincare_profile(const WeightSequence& p) {
  require_wild(p, "the Poincare profile");
  PoincareProfile prof{p, poincare_closed(p), {}, {}, {}, false};
  prof.monoid = support_monoid(p);
  std::size_t len = std::max<std::size_t>(60, prof.monoid.conductor + 10);
  prof.coeffs = integer_series(prof.series, len);
  prof.decomposition = formal_decomposition(p);
  prof.complete_intersection = is_complete_intersection_formal(p);
  return prof;
}

}  // namespace coxalg
