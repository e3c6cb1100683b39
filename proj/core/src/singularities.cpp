#include "coxalg/singularities.hpp"

#include <algorithm>
#include <stdexcept>

#include "coxalg/intpoly.hpp"
#include "coxalg/poincare.hpp"

namespace coxalg {

Int Monomial::weighted_degree(const std::array<unsigned, 3>& degrees) const {
  Int d = 0;
  for (int i = 0; i < 3; ++i) d += Int(e[i]) * degrees[i];
  return d;
}

namespace {

std::string monomial_str(const Monomial& m) {
  static const char* vars[3] = {"X", "Y", "Z"};
  std::string s;
  for (int i = 0; i < 3; ++i) {
    if (m.e[i] == 0) continue;
    if (!s.empty()) s += ' ';
    s += vars[i];
    if (m.e[i] > 1) {
      s += '^';
      s += std::to_string(m.e[i]);
    }
  }
  return s.empty() ? "1" : s;
}

Monomial term(int sign, unsigned a, unsigned b, unsigned c) {
  return Monomial{sign, {a, b, c}};
}

HypersurfaceRecord record(std::vector<unsigned> weight,
                          std::array<unsigned, 3> degrees,
                          std::vector<Monomial> relation, unsigned rel_degree,
                          std::string name, bool exceptional) {
  HypersurfaceRecord r{WeightSequence(std::move(weight)),
                       degrees,
                       std::move(relation),
                       rel_degree,
                       std::move(name),
                       exceptional,
                       false};
  // Structural sanity of the bundled data is recomputed rather than stored,
  // so a record carrying a misprint is flagged the moment it is built.
  Int target = 1;
  for (unsigned d : r.degrees) target += d;
  bool ok = target == r.rel_degree;
  for (const auto& m : r.relation)
    ok = ok && m.weighted_degree(r.degrees) == r.rel_degree;
  r.flagged = !ok;
  return r;
}

}  // namespace

std::string relation_str(const HypersurfaceRecord& r) {
  std::string s;
  for (const auto& m : r.relation) {
    if (s.empty()) {
      if (m.sign < 0) s += "-";
    } else {
      s += m.sign < 0 ? " - " : " + ";
    }
    s += monomial_str(m);
  }
  return s;
}

const std::vector<HypersurfaceRecord>& hypersurface_registry() {
  static const std::vector<HypersurfaceRecord> rows = [] {
    std::vector<HypersurfaceRecord> r;
    // Three-arm weights: the fourteen exceptional unimodal singularities.
    r.push_back(record({2, 3, 7}, {6, 14, 21},
                       {term(1, 0, 0, 2), term(1, 0, 3, 0), term(1, 7, 0, 0)},
                       42, "E12", true));
    r.push_back(record({2, 3, 8}, {6, 8, 15},
                       {term(1, 0, 0, 2), term(1, 5, 0, 0), term(1, 1, 3, 0)},
                       30, "Z11", true));
    r.push_back(record({2, 3, 9}, {6, 8, 9},
                       {term(1, 0, 0, 2), term(1, 1, 0, 2), term(1, 4, 0, 0)},
                       36, "Q10", true));
    r.push_back(record({2, 4, 5}, {4, 10, 15},
                       {term(1, 0, 0, 2), term(1, 0, 3, 0), term(1, 5, 1, 0)},
                       30, "E13", true));
    r.push_back(record({2, 4, 6}, {4, 6, 11},
                       {term(1, 0, 0, 2), term(1, 4, 1, 0), term(1, 0, 3, 1)},
                       22, "Z12", true));
    r.push_back(record({2, 4, 7}, {4, 6, 7},
                       {term(1, 0, 3, 0), term(1, 3, 1, 0), term(1, 1, 0, 2)},
                       18, "Q11", true));
    r.push_back(record({2, 5, 5}, {4, 5, 10},
                       {term(1, 0, 0, 2), term(1, 0, 2, 1), term(1, 5, 0, 0)},
                       20, "W12", true));
    r.push_back(record({2, 5, 6}, {4, 5, 6},
                       {term(1, 1, 0, 2), term(1, 0, 2, 1), term(1, 4, 0, 0)},
                       16, "S11", true));
    r.push_back(record({3, 3, 4}, {3, 8, 12},
                       {term(1, 0, 0, 2), term(1, 0, 3, 0), term(1, 4, 0, 1)},
                       24, "E14", true));
    r.push_back(record({3, 3, 5}, {3, 5, 9},
                       {term(1, 0, 0, 2), term(1, 1, 3, 0), term(1, 3, 0, 1)},
                       18, "Z13", true));
    r.push_back(record({3, 3, 6}, {3, 5, 6},
                       {term(1, 0, 3, 0), term(1, 3, 0, 1), term(1, 1, 0, 2)},
                       15, "Q12", true));
    r.push_back(record({3, 4, 4}, {3, 4, 8},
                       {term(1, 0, 0, 2), term(-1, 0, 2, 1), term(1, 4, 1, 0)},
                       16, "W13", true));
    r.push_back(record({3, 4, 5}, {3, 4, 5},
                       {term(1, 3, 1, 0), term(1, 1, 0, 2), term(1, 0, 2, 1)},
                       13, "S12", true));
    r.push_back(record({4, 4, 4}, {3, 4, 4},
                       {term(1, 4, 0, 0), term(-1, 0, 1, 2), term(1, 0, 2, 1)},
                       12, "U12", true));
    // Weights with four or more arms.
    r.push_back(record({2, 2, 2, 3}, {2, 6, 9},
                       {term(1, 0, 0, 2), term(1, 0, 3, 0), term(1, 9, 0, 0)},
                       18, "J3,0", false));
    r.push_back(record({2, 2, 2, 4}, {2, 4, 7},
                       {term(1, 0, 0, 2), term(1, 1, 3, 0), term(1, 7, 0, 0)},
                       14, "Z1,0", false));
    r.push_back(record({2, 2, 2, 5}, {2, 4, 5},
                       {term(1, 0, 3, 0), term(1, 1, 0, 2), term(1, 6, 0, 0)},
                       12, "Q2,0", false));
    r.push_back(record({2, 2, 3, 3}, {2, 3, 6},
                       {term(1, 0, 0, 2), term(1, 0, 4, 0), term(1, 6, 0, 0)},
                       12, "W1,0", false));
    r.push_back(record({2, 2, 3, 4}, {2, 3, 4},
                       {term(1, 0, 2, 1), term(1, 1, 0, 2), term(1, 5, 0, 0)},
                       10, "S1,0", false));
    r.push_back(record({2, 3, 3, 3}, {2, 3, 3},
                       {term(1, 0, 0, 3), term(1, 0, 3, 0), term(1, 3, 1, 0)},
                       9, "U1,0", false));
    r.push_back(record({2, 2, 2, 2, 2}, {2, 2, 5},
                       {term(1, 0, 0, 2), term(1, 0, 5, 0), term(1, 5, 0, 0)},
                       10, "NA^1_{0,0}", false));
    r.push_back(record({2, 2, 2, 2, 3}, {2, 2, 3},
                       {term(1, 0, 1, 2), term(1, 0, 4, 0), term(1, 4, 0, 0)},
                       8, "VNA^1_{0,0}", false));
    return r;
  }();
  return rows;
}

std::optional<HypersurfaceRecord> find_hypersurface(const WeightSequence& p) {
  for (const auto& r : hypersurface_registry())
    if (r.weight == p) return r;
  return std::nullopt;
}

RecordCheck verify_record(const HypersurfaceRecord& r) {
  RecordCheck check;

  check.homogeneous = true;
  for (const auto& m : r.relation)
    check.homogeneous =
        check.homogeneous && m.weighted_degree(r.degrees) == r.rel_degree;

  Int target = 1;
  for (unsigned d : r.degrees) target += d;
  check.degree_identity = target == r.rel_degree;

  // Hilbert series of the hypersurface ring against the weight's series.
  IntPoly num = IntPoly::constant(1) - IntPoly::monomial(1, r.rel_degree);
  IntPoly den = IntPoly::constant(1);
  for (unsigned d : r.degrees)
    den *= IntPoly::constant(1) - IntPoly::monomial(1, d);
  check.hilbert = RatFunc(num, den) == poincare_closed(r.weight);

  return check;
}

std::optional<HypersurfaceRecord> derive_correction(
    const HypersurfaceRecord& r) {
  if (verify_record(r).all()) return std::nullopt;

  // The degree of F is forced by the generator degrees; terms of the right
  // weighted degree are kept and the rest are exchanged for the unused
  // monomials of that degree, provided the counts agree exactly.
  Int target = 1;
  for (unsigned d : r.degrees) target += d;

  HypersurfaceRecord fixed = r;
  fixed.rel_degree = static_cast<unsigned>(target);

  std::vector<std::size_t> bad;
  for (std::size_t i = 0; i < fixed.relation.size(); ++i)
    if (fixed.relation[i].weighted_degree(fixed.degrees) != target)
      bad.push_back(i);

  if (!bad.empty()) {
    std::vector<std::array<unsigned, 3>> candidates;
    const auto& d = fixed.degrees;
    for (unsigned a = 0; Int(a) * d[0] <= target; ++a)
      for (unsigned b = 0; Int(a) * d[0] + Int(b) * d[1] <= target; ++b) {
        Int rest = target - Int(a) * d[0] - Int(b) * d[1];
        if (rest % d[2] != 0) continue;
        unsigned c = static_cast<unsigned>(rest / d[2]);
        std::array<unsigned, 3> cand{a, b, c};
        bool taken = false;
        for (const auto& m : fixed.relation)
          taken = taken || (m.weighted_degree(fixed.degrees) == target &&
                            m.e == cand);
        if (!taken) candidates.push_back(cand);
      }
    if (candidates.size() != bad.size()) return std::nullopt;
    std::sort(candidates.begin(), candidates.end());
    for (std::size_t k = 0; k < bad.size(); ++k)
      fixed.relation[bad[k]].e = candidates[k];
  }

  fixed.flagged = false;
  if (!verify_record(fixed).all()) return std::nullopt;
  return fixed;
}

bool t4_criterion(const WeightSequence& p) {
  if (p.t() < 4)
    throw std::invalid_argument("t4_criterion needs at least four arms");
  if (classify(p) != ReprType::Wild)
    throw std::invalid_argument("t4_criterion needs a wild weight sequence");
  return 9 <= p.sum() && p.sum() <= 11;
}

}  // namespace coxalg
