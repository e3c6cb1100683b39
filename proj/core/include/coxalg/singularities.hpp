#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "coxalg/ratfunc.hpp"
#include "coxalg/weights.hpp"

namespace coxalg {

// A term +-X^a Y^b Z^c of a hypersurface equation.
struct Monomial {
  int sign = 1;                    // +1 or -1
  std::array<unsigned, 3> e{};     // exponents of X, Y, Z

  Int weighted_degree(const std::array<unsigned, 3>& degrees) const;
  bool operator==(const Monomial& o) const = default;
};

// A weighted-homogeneous hypersurface singularity attached to a wild
// three-generated weight sequence.
struct HypersurfaceRecord {
  WeightSequence weight;
  std::array<unsigned, 3> degrees{};  // generator degrees d_1 <= d_2 <= d_3
  std::vector<Monomial> relation;     // terms of the equation F
  unsigned rel_degree = 0;            // weighted degree of F
  std::string name;                   // singularity label, e.g. "E12"
  bool exceptional_unimodal = false;  // one of Arnold's 14
  bool flagged = false;               // printed data fails a structural check
};

std::string relation_str(const HypersurfaceRecord& r);

// The 22 bundled records: 14 exceptional unimodal singularities for t = 3
// and 8 further records for t >= 4.
const std::vector<HypersurfaceRecord>& hypersurface_registry();

std::optional<HypersurfaceRecord> find_hypersurface(const WeightSequence& p);

struct RecordCheck {
  bool homogeneous = false;      // every term has weighted degree rel_degree
  bool degree_identity = false;  // 1 + sum degrees == rel_degree
  bool hilbert = false;          // (1 - T^rel_degree)/prod(1 - T^d_i) matches
  bool all() const { return homogeneous && degree_identity && hilbert; }
};

RecordCheck verify_record(const HypersurfaceRecord& r);

// For a record failing verification, searches for the minimal edit fixing
// it: the weighted degree of F is forced to 1 + sum degrees, offending
// terms are replaced by unused monomials of that degree. Empty when no
// unambiguous correction exists.
std::optional<HypersurfaceRecord> derive_correction(const HypersurfaceRecord& r);

// For wild p with t >= 4: true exactly when 9 <= sum p_i <= 11.
bool t4_criterion(const WeightSequence& p);

}  // namespace coxalg
