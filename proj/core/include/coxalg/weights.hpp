#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coxalg/types.hpp"

namespace coxalg {

enum class ReprType { Domestic, Tubular, Wild };

const char* repr_type_name(ReprType t);

// The four minimal wild star shapes, ordered by weight sum.
enum class DynkinLabel { L2222, L333, L244, L236 };

unsigned dynkin_index(DynkinLabel l);                  // 2, 3, 4, 6
const std::vector<unsigned>& dynkin_parts(DynkinLabel l);
std::string dynkin_name(DynkinLabel l);                // "[2,2,2,2]" etc.

// A weight sequence: at least two entries, each at least 2, sorted
// nondecreasing. Construction normalizes (sorts, drops entries equal to 1).
class WeightSequence {
 public:
  explicit WeightSequence(std::vector<unsigned> parts);

  static std::optional<WeightSequence> parse(std::string_view text);

  const std::vector<unsigned>& parts() const { return parts_; }
  unsigned t() const { return static_cast<unsigned>(parts_.size()); }
  unsigned sum() const;
  unsigned sum_minus_t() const;  // sum of (p_i - 1)

  std::string str() const;  // "(2,3,7)"
  std::string csv() const;  // "2,3,7"

  auto operator<=>(const WeightSequence& o) const = default;

 private:
  std::vector<unsigned> parts_;
};

// Orbifold Euler characteristic 2 - sum (1 - 1/p_i).
Rat euler_char(const WeightSequence& p);

// Sign of euler_char decides the type; tubular weights are exactly
// (2,3,6), (2,4,4), (3,3,3), (2,2,2,2).
ReprType classify(const WeightSequence& p);

// True when q dominates p: pad the shorter with 1s on the left, then
// compare entrywise.
bool dominates(const WeightSequence& p, const WeightSequence& q);
bool strictly_dominated_by(const WeightSequence& p, const WeightSequence& q);

// Minimal wild star shape fitting under p. Requires p wild.
DynkinLabel dynkin_label(const WeightSequence& p);

// The 18 minimal wild weight sequences, in the standard order.
const std::vector<WeightSequence>& critical_list();

// True when some critical sequence strictly dominates p. Requires p wild.
bool in_circle_list(const WeightSequence& p);

// All weight sequences with sum <= max_sum, entries <= max_entry, length
// between 2 and max_t, in lexicographic order.
std::vector<WeightSequence> enumerate_weights(unsigned max_sum, unsigned max_entry, unsigned max_t);
std::vector<WeightSequence> enumerate_wild(unsigned max_sum, unsigned max_entry, unsigned max_t);

}  // namespace coxalg
