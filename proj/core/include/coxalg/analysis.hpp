#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxalg/coxeter.hpp"
#include "coxalg/poincare.hpp"
#include "coxalg/singularities.hpp"
#include "coxalg/weights.hpp"

namespace coxalg {

// Everything the analyzer knows about one weight sequence. Fields below the
// representation type are only populated where they make sense; the Poincare
// block applies to wild weights.
struct AnalysisReport {
  WeightSequence weight;
  Rat euler;
  ReprType repr_type;
  std::optional<DynkinLabel> dynkin;  // wild only

  IntPoly f_canonical;
  IntPoly f_extended;
  CycloFactorization factorization;
  bool on_circle = false;
  unsigned off_circle = 0;
  SpectralRadius spectral;
  Period period;

  std::optional<RatFunc> poincare;
  std::vector<Int> series_coeffs;
  std::optional<NumericalSemigroup> monoid;
  std::optional<GeneratedForm> decomposition;
  std::optional<bool> complete_intersection;
  std::optional<bool> three_gen;
  std::optional<HypersurfaceRecord> hypersurface;

  // Disagreements between recomputed values and the bundled reference data.
  std::vector<std::string> annotations;
};

AnalysisReport analyze(const WeightSequence& p);

// Deterministic JSON (keys sorted, arrays in canonical order).
std::string render_json(const AnalysisReport& r);

// Human-readable multi-line summary.
std::string render_text(const AnalysisReport& r);

}  // namespace coxalg
