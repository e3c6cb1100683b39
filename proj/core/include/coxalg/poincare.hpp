#pragma once

#include <optional>
#include <vector>

#include "coxalg/ratfunc.hpp"
#include "coxalg/weights.hpp"

namespace coxalg {

// Hilbert-Poincare series of the stable exceptional pair, closed form:
// T + 1/(1-T) + (t-2) T/(1-T)^2 - sum_i T/((1-T)(1-T^{p_i})).
RatFunc poincare_closed(const WeightSequence& p);

// The same series as f_hat / f_C.
RatFunc poincare_via_coxeter(const WeightSequence& p);

// The same series as 1 + T - T f_[p] / f_C.
RatFunc poincare_via_star(const WeightSequence& p);

struct NumericalSemigroup {
  std::vector<unsigned> generators;  // minimal, increasing
  unsigned frobenius = 0;            // largest gap
  unsigned conductor = 0;            // frobenius + 1
};

// Additive monoid generated by the support of the series. Requires p wild;
// checks that the support is closed under addition within the horizon, that
// the generators number at most six, and that their gcd is 1.
NumericalSemigroup support_monoid(const WeightSequence& p);

// Formal presentation of the series as prod (1 - T^c) / prod (1 - T^d):
// d lists n generator degrees, c lists n - 2 relation degrees.
struct GeneratedForm {
  std::vector<unsigned> d;  // nondecreasing, each >= 2
  std::vector<unsigned> c;  // nondecreasing, each >= 2, size d.size() - 2
};

// Smallest-n presentation, capped at n_max generators. Requires p wild.
// Empty exactly when some root of the extended Coxeter polynomial leaves
// the unit circle (or no presentation with at most n_max generators exists).
std::optional<GeneratedForm> formal_decomposition(const WeightSequence& p, unsigned n_max = 8);

// True when the extended Coxeter polynomial is a product of cyclotomics.
// Requires p wild.
bool is_complete_intersection_formal(const WeightSequence& p);

// True when the formal decomposition exists with exactly three generators.
// Requires p wild.
bool three_generated(const WeightSequence& p);

struct PoincareProfile {
  WeightSequence weight;
  RatFunc series;
  std::vector<Int> coeffs;  // integer series coefficients, from T^0
  NumericalSemigroup monoid;
  std::optional<GeneratedForm> decomposition;
  bool complete_intersection = false;
};

// Requires p wild.
PoincareProfile poincare_profile(const WeightSequence& p);

}  // namespace coxalg
