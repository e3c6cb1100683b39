#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "coxalg/coxeter.hpp"

namespace coxalg {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::msb;
using boost::multiprecision::numerator;

// Interval endpoints share one implicit power-of-two scale per coefficient
// array. Only signs are ever read off, so the scale itself is never tracked:
// renormalization shifts every endpoint of an array by the same amount.
struct Iv {
  Int lo, hi;
};

Int shift_floor(const Int& x, unsigned s) {
  if (x >= 0) return x >> s;
  return -((-x + ((Int(1) << s) - 1)) >> s);
}

Int shift_ceil(const Int& x, unsigned s) {
  if (x >= 0) return (x + ((Int(1) << s) - 1)) >> s;
  return -((-x) >> s);
}

Iv iv_mul(const Iv& a, const Iv& b) {
  Int p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min(std::min(p1, p2), std::min(p3, p4)),
          std::max(std::max(p1, p2), std::max(p3, p4))};
}

Iv iv_sub(const Iv& a, const Iv& b) { return {a.lo - b.hi, a.hi - b.lo}; }

// +1, -1, or nothing when the interval cannot be separated from zero.
std::optional<int> iv_sign(const Iv& v) {
  if (v.lo > 0) return 1;
  if (v.hi < 0) return -1;
  return std::nullopt;
}

unsigned bitlen(const Int& x) {
  if (x == 0) return 0;
  return static_cast<unsigned>(msb(x < 0 ? Int(-x) : x)) + 1;
}

void renormalize(std::vector<Iv>& f, unsigned prec) {
  unsigned m = 0;
  for (const auto& c : f) m = std::max({m, bitlen(c.lo), bitlen(c.hi)});
  if (m <= prec) return;
  unsigned s = m - prec;
  for (auto& c : f) {
    c.lo = shift_floor(c.lo, s);
    c.hi = shift_ceil(c.hi, s);
  }
}

// Number of roots of the polynomial behind f (formal degree m) strictly
// inside the unit disk, by the Schur transform f -> a_0 f - a_m rev(f).
// Sound: every delta sign below is certified, and a root exactly on the
// circle forces the exact delta chain to hit zero, which the enclosing
// intervals then report as indeterminate.
std::optional<unsigned> schur_count(std::vector<Iv> f, unsigned prec) {
  unsigned m = static_cast<unsigned>(f.size()) - 1;
  if (m == 0) return 0u;
  Iv a0 = f.front(), am = f.back();
  auto delta = iv_sign(iv_sub(iv_mul(a0, a0), iv_mul(am, am)));
  if (!delta) return std::nullopt;
  std::vector<Iv> tf(m);
  for (unsigned i = 0; i < m; ++i) tf[i] = iv_sub(iv_mul(a0, f[i]), iv_mul(am, f[m - i]));
  renormalize(tf, prec);
  auto sub = schur_count(std::move(tf), prec);
  if (!sub) return std::nullopt;
  return *delta > 0 ? *sub : m - *sub;
}

// Roots of g strictly inside |z| < r, certified, or nothing if the working
// precision cannot separate a pivot from zero (typically: a root sits on or
// near the circle of radius r).
std::optional<unsigned> count_inside(const IntPoly& g, const Rat& r, unsigned prec) {
  unsigned n = static_cast<unsigned>(g.degree());
  const Int num = numerator(r), den = denominator(r);
  std::vector<Iv> f(n + 1);
  Int np = 1;
  std::vector<Int> dp(n + 1);
  dp[n] = 1;
  for (unsigned k = n; k-- > 0;) dp[k] = dp[k + 1] * den;
  for (unsigned k = 0; k <= n; ++k) {
    Int c = (g.coeff(k) * np * dp[k]) << prec;  // g(rT) * den^n, scaled
    f[k] = {c, c};
    np *= num;
  }
  renormalize(f, prec);
  return schur_count(std::move(f), prec);
}

// count_inside at r, retrying nearby dyadic points inside (lo, hi) and
// escalating precision until certification succeeds. Returns the point that
// certified together with the count.
std::pair<Rat, unsigned> certified_count(const IntPoly& g, const Rat& r, const Rat& lo,
                                         const Rat& hi) {
  Rat w = hi - lo;
  const Rat offsets[] = {Rat(0),      w / 64,       -w / 64,      w / 32,
                         -w / 32,     Rat(3) * w / 64, -Rat(3) * w / 64};
  for (unsigned prec = 256; prec <= 4096; prec *= 2) {
    for (const Rat& off : offsets) {
      Rat point = r + off;
      if (point <= lo || point >= hi) continue;
      if (auto c = count_inside(g, point, prec)) return {point, *c};
    }
  }
  throw std::logic_error("disk count failed to certify near the probe radius");
}

struct Chain {
  IntPoly poly;
  std::vector<IntPoly> elems;

  explicit Chain(const IntPoly& squarefree) : poly(squarefree) {
    elems.push_back(squarefree);
    elems.push_back(squarefree.derivative().primitive());
    while (elems.back().degree() > 0) {
      auto [q, r] = divrem(RatPoly(elems[elems.size() - 2]), RatPoly(elems.back()));
      (void)q;
      if (r.is_zero()) throw std::logic_error("repeated roots in squarefree polynomial");
      elems.push_back(-r.primitive_integer());
    }
  }

  unsigned variations(const Rat& x) const {
    unsigned v = 0;
    int prev = 0;
    for (const auto& p : elems) {
      int s = p.sign_at(x);
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
    return v;
  }

  unsigned count(const Rat& lo, const Rat& hi) const {
    if (lo >= hi) return 0;
    return variations(lo) - variations(hi);
  }
};

// Shrinks (a, b] around its unique root of the chain polynomial until the
// width is at most tol; tolerates roots hitting interval endpoints.
RatInterval refine_by_count(const Chain& chain, Rat a, Rat b, const Rat& tol) {
  while (b - a > tol) {
    Rat m = (a + b) / 2;
    if (chain.count(m, b) >= 1)
      a = m;
    else
      b = m;
  }
  return {a, b};
}

// Rational enclosure of sqrt(v) for v >= 0.
RatInterval sqrt_bounds(const Rat& v, unsigned bits) {
  if (v < 0) throw std::invalid_argument("square root of a negative value");
  Int n = numerator(v), d = denominator(v);
  Int scaled = (n * d) << (2 * bits);
  Int root = boost::multiprecision::sqrt(scaled);
  Rat denom = Rat(d * (Int(1) << bits));
  return {Rat(root) / denom, Rat(root + 1) / denom};
}

// Enclosure of (x + sqrt(x^2 - 4)) / 2 for an enclosure [xl, xh] of a value
// x >= 2; increasing in x.
RatInterval modulus_from_real(const Rat& xl, const Rat& xh) {
  Rat l2 = xl * xl - 4, h2 = xh * xh - 4;
  if (l2 < 0) l2 = 0;
  RatInterval sl = sqrt_bounds(l2, 96), sh = sqrt_bounds(h2, 96);
  return {(xl + sl.lo) / 2, (xh + sh.hi) / 2};
}

}  // namespace

SpectralRadius spectral_radius(const WeightSequence& p, const Rat& tol) {
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  IntPoly f_hat = extended_coxeter_poly(p);
  IntPoly g = factor_cyclotomic(f_hat).remainder;

  SpectralRadius out;
  if (g.degree() == 0) {
    out.interval = {Rat(1), Rat(1)};
    out.on_circle = true;
    return out;
  }
  if (!g.palindromic() || g.degree() % 2 != 0)
    throw std::logic_error("non-cyclotomic part fails to be self-reciprocal of even degree");

  unsigned n = static_cast<unsigned>(g.degree());

  // certified bisection on the disk-counting predicate; the radius exceeds 1
  // strictly (a monic non-cyclotomic integer polynomial has a root outside
  // the unit circle), so the left end needs no probe
  Rat lo = 1;
  Rat hi = cauchy_root_bound(g);
  Int hi_int = numerator(hi) / denominator(hi) + 2;
  hi = Rat(hi_int);
  for (;;) {
    auto [pt, cnt] = certified_count(g, hi, Rat(1), hi * 2);
    if (cnt == n) {
      hi = pt;
      break;
    }
    hi = hi * 2;  // cannot recur: the Cauchy bound already encloses all roots
  }
  while (hi - lo > tol) {
    Rat mid = (lo + hi) / 2;
    auto [pt, cnt] = certified_count(g, mid, lo, hi);
    if (cnt == n)
      hi = pt;
    else
      lo = pt;
  }
  out.interval = {lo, hi};

  // descend to h with g(T) = T^w h(T + 1/T) and locate real roots of h
  // beyond [-2, 2]; they carry the real Salem-like pairs x, 1/x
  unsigned w = n / 2;
  IntPoly h;
  {
    IntPoly z_prev = IntPoly::constant(2), z_cur = IntPoly::variable();
    h = IntPoly::constant(g.coeff(w));
    for (unsigned k = 1; k <= w; ++k) {
      h += g.coeff(w + k) * z_cur;
      IntPoly z_next = IntPoly::variable() * z_cur - z_prev;
      z_prev = std::move(z_cur);
      z_cur = std::move(z_next);
    }
  }
  if (represent_transform(h) != g)
    throw std::logic_error("Chebyshev descent failed to reproduce the polynomial");

  IntPoly hsf = squarefree_part(h);
  Chain chain(hsf);
  Rat bound = cauchy_root_bound(h) + 1;
  Rat tolx = tol / 8;
  std::vector<RatInterval> moduli;
  for (const RatInterval& br : isolate_real_roots(hsf, Rat(2), bound)) {
    RatInterval x = refine_by_count(chain, br.lo, br.hi, tolx);
    moduli.push_back(modulus_from_real(x.lo, x.hi));
  }
  for (const RatInterval& br : isolate_real_roots(hsf, -bound, Rat(-2))) {
    RatInterval x = refine_by_count(chain, br.lo, br.hi, tolx);
    moduli.push_back(modulus_from_real(-x.hi, -x.lo));
  }

  for (const RatInterval& m : moduli) {
    if (m.lo > out.interval.hi)
      throw std::logic_error("real pair modulus exceeds the certified radius");
    if (m.hi >= out.interval.lo) out.dominant_real = true;
  }
  out.complex_quadruple = !out.dominant_real;
  return out;
}

}  // namespace coxalg
