#pragma once

#include <vector>

#include "coxalg/intpoly.hpp"

namespace coxalg {

struct RatInterval {
  Rat lo, hi;
  Rat width() const { return hi - lo; }
  Rat mid() const { return (lo + hi) / 2; }
  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
};

// Number of distinct real roots of f in the half-open interval (lo, hi].
// Multiplicities are ignored (the count is taken on the squarefree part).
unsigned sturm_count(const IntPoly& f, const Rat& lo, const Rat& hi);

// Number of real roots of f in the closed interval [lo, hi], counted with
// multiplicity.
unsigned count_roots_closed(const IntPoly& f, const Rat& lo, const Rat& hi);

// Shrinks a bracket with sign(f(lo)) != sign(f(hi)), both nonzero, around its
// unique root until the width is at most tol. Exact bisection; if a midpoint
// is hit exactly, the result degenerates to a point.
RatInterval refine_root(const IntPoly& f, RatInterval bracket, const Rat& tol);

// Disjoint intervals (a, b], one per distinct real root of f in (lo, hi].
std::vector<RatInterval> isolate_real_roots(const IntPoly& f, const Rat& lo, const Rat& hi);

// 1 + max |a_k| / |a_n|: every complex root has modulus below this.
Rat cauchy_root_bound(const IntPoly& f);

}  // namespace coxalg
