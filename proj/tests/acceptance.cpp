// Acceptance harness: recomputes everything the bundled tables claim and
// checks the cross-module identities on bounded enumerations. Prints one
// line per criterion and exits nonzero when any criterion fails. Expected
// wall time: well under five minutes.

#include <cstdio>
#include <exception>
#include <set>
#include <string>
#include <vector>

#include "coxalg/analysis.hpp"
#include "coxalg/cartan.hpp"
#include "coxalg/coxeter.hpp"
#include "coxalg/cyclotomic.hpp"
#include "coxalg/poincare.hpp"
#include "coxalg/reference.hpp"
#include "coxalg/singularities.hpp"
#include "coxalg/weights.hpp"
#include "fixtures.hpp"

namespace {

using namespace coxalg;

int failures = 0;

void report(int n, bool ok, const std::string& label,
            const std::vector<std::string>& detail = {}) {
  std::printf("criterion %2d: %s  %s\n", n, ok ? "pass" : "FAIL", label.c_str());
  for (const auto& line : detail) std::printf("              - %s\n", line.c_str());
  if (!ok) ++failures;
}

template <class F>
void guard(int n, F&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    report(n, false, "aborted by exception", {e.what()});
  }
}

std::string rat_8dp(const Rat& x) {
  Int scaled = numerator(x) * 100000000 / denominator(x);
  std::string s = scaled.str();
  while (s.size() < 9) s.insert(0, "0");
  return s.substr(0, s.size() - 8) + "." + s.substr(s.size() - 8);
}

Rat parse_decimal(const std::string& s) {
  auto dot = s.find('.');
  if (dot == std::string::npos) return Rat(Int(s));
  std::string frac = s.substr(dot + 1);
  Int scale = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  return Rat(Int(s.substr(0, dot)) * scale + Int(frac), scale);
}

std::string printed_cyclo_str(const reference::CycloList& list) {
  std::string s;
  for (const auto& [index, mult] : list) {
    if (!s.empty()) s += ' ';
    s += "phi_" + std::to_string(index);
    if (mult > 1) s += "^" + std::to_string(mult);
  }
  return s.empty() ? "1" : s;
}

IntPoly square_subst(const IntPoly& f) {
  std::vector<Int> c(2 * static_cast<std::size_t>(f.degree()) + 1);
  for (int k = 0; k <= f.degree(); ++k)
    c[2 * static_cast<std::size_t>(k)] = f.coeff(static_cast<std::size_t>(k));
  return IntPoly(c);
}

// Everything recomputed once per wild weight in the shared enumeration.
struct WildData {
  WeightSequence p;
  IntPoly f_hat;
  bool on_circle = false;
  bool in_list = false;
  unsigned off = 0;
  bool has_decomposition = false;
  bool three_gen = false;
  bool top_cyclotomic = false;
  Period period;
  std::size_t generator_count = 0;
};

void criterion_1_table2(const std::vector<WildData>& wild) {
  std::vector<std::string> detail;
  bool ok = true;

  std::set<std::vector<unsigned>> sanctioned_typos;
  for (const auto& w : testing::factorization_typo_weights())
    sanctioned_typos.insert(w);

  std::set<std::vector<unsigned>> factor_mismatches;
  std::set<std::vector<unsigned>> period_mismatches;

  for (const auto& row : reference::table2()) {
    WeightSequence p(row.weight);
    IntPoly f_hat = extended_coxeter_poly(p);
    CycloFactorization fac = factor_cyclotomic(f_hat);

    if (!fac.fully_cyclotomic()) {
      ok = false;
      detail.push_back(p.str() + ": expected a cyclotomic product, got " + fac.str());
      continue;
    }
    if (fac.factors != row.cyclo) {
      factor_mismatches.insert(row.weight);
      if (cyclotomic_product(row.cyclo) == f_hat) {
        ok = false;  // lists differ yet rebuild the same polynomial: impossible
        detail.push_back(p.str() +
                         ": factorization lists disagree yet rebuild the same polynomial");
      } else {
        detail.push_back(p.str() + ": printed " + printed_cyclo_str(row.cyclo) +
                         " fails the reconstruction identity; recomputed " + fac.str());
      }
    }

    auto dec = formal_decomposition(p);
    if (!dec || dec->d != row.d || dec->c != row.c) {
      ok = false;
      detail.push_back(p.str() + ": decomposition differs from the printed (d;c)");
    }

    Period printed = row.period_finite ? Period::of(row.period) : Period::infinite();
    Period computed = coxeter_period(p);
    if (!(computed == printed)) {
      period_mismatches.insert(row.weight);
      detail.push_back(p.str() + ": printed period " + printed.str() + ", recomputed " +
                       computed.str());
    }
  }

  if (factor_mismatches != sanctioned_typos) {
    ok = false;
    detail.push_back("factorization deviations fail to match the four known misprints");
  }
  if (period_mismatches != std::set<std::vector<unsigned>>{{2, 3, 10}}) {
    ok = false;
    detail.push_back("period deviations differ from the single known one at (2,3,10)");
  }

  // The 38 rows are exactly the circle-rooted wild weights of the enumeration.
  std::set<std::vector<unsigned>> table_weights, circle_weights;
  for (const auto& row : reference::table2()) table_weights.insert(row.weight);
  for (const auto& w : wild)
    if (w.on_circle) circle_weights.insert(w.p.parts());
  if (table_weights != circle_weights) {
    ok = false;
    detail.push_back("table rows differ from the circle-rooted weights of the enumeration");
  }

  report(1, ok, "table 2: factorizations, (d;c), periods (sanctioned deviations flagged)",
         detail);
}

void criterion_2_table1() {
  std::vector<std::string> detail;
  bool ok = true;

  for (const auto& row : reference::table1()) {
    WeightSequence p(row.actual);
    IntPoly f_hat = extended_coxeter_poly(p);
    CycloFactorization fac = factor_cyclotomic(f_hat);

    unsigned index = dynkin_index(dynkin_label(p));
    if (index != row.dynkin_index) {
      ok = false;
      detail.push_back(p.str() + ": printed index " + std::to_string(row.dynkin_index) +
                       ", recomputed " + std::to_string(index));
    }

    std::vector<Int> tail(row.tail.begin(), row.tail.end());
    bool rebuilds = cyclotomic_product(row.cyclo) * IntPoly(tail) == f_hat;
    if (!rebuilds) {
      std::string line = p.str() + ": printed factorization " +
                         printed_cyclo_str(row.cyclo) +
                         " * tail fails the reconstruction identity; recomputed " + fac.str();
      if (row.tail_misprint_known) {
        detail.push_back(line + " (sanctioned: known duplicated-term misprint)");
      } else {
        ok = false;
        detail.push_back(line);
      }
    } else if (row.tail_misprint_known) {
      ok = false;
      detail.push_back(p.str() + ": expected the known misprint to fail reconstruction");
    }

    SpectralRadius s = spectral_radius(p);
    Rat printed = parse_decimal(row.rho);
    Rat diff = s.interval.mid() - printed;
    if (diff < 0) diff = -diff;
    if (diff > Rat(5, 100000)) {
      ok = false;
      detail.push_back(p.str() + ": printed radius " + row.rho + ", recomputed " +
                       rat_8dp(s.interval.mid()) + " (beyond the 5e-5 tolerance)");
    }

    unsigned off = off_circle_count(p);
    if (off < 2 || off > 4) {
      ok = false;
      detail.push_back(p.str() + ": off-circle count " + std::to_string(off) +
                       " outside [2,4]");
    }
  }

  report(2, ok, "table 1: indices, radii within 5e-5, non-cyclotomic factors", detail);
}

void criterion_3_table3(const std::vector<WildData>& wild) {
  std::vector<std::string> detail;
  bool ok = true;

  for (const auto& row : reference::table3()) {
    WeightSequence p(row.actual);
    NumericalSemigroup m = support_monoid(p);
    if (m.generators != row.generators || m.frobenius != row.frobenius) {
      ok = false;
      detail.push_back(p.str() + ": monoid differs from the printed row");
    }
  }

  for (const auto& w : wild) {
    if (w.generator_count > 6) {
      ok = false;
      detail.push_back(w.p.str() + ": " + std::to_string(w.generator_count) + " generators");
    }
  }

  report(3, ok, "table 3: Frobenius numbers and generator sets; at most six generators",
         detail);
}

void criterion_4_circle(const std::vector<WildData>& wild) {
  std::vector<std::string> detail;
  bool ok = true;
  for (const auto& w : wild) {
    if (w.on_circle != w.in_list) {
      ok = false;
      detail.push_back(w.p.str() + ": Sturm decision and domination list disagree");
    }
    if (w.off > 4) {
      ok = false;
      detail.push_back(w.p.str() + ": off-circle count " + std::to_string(w.off));
    }
  }
  report(4, ok,
         "roots_on_circle matches the domination list on " + std::to_string(wild.size()) +
             " wild weights; off-circle count at most 4",
         detail);
}

void criterion_5_series() {
  std::vector<std::string> detail;
  bool ok = true;
  unsigned checked = 0;
  for (const WeightSequence& p : enumerate_weights(20, 18, 10)) {
    ++checked;
    RatFunc closed = poincare_closed(p);
    bool same = closed == poincare_via_coxeter(p) && closed == poincare_via_star(p) &&
                closed * RatFunc(canonical_coxeter_poly(p)) ==
                    RatFunc(extended_coxeter_poly(p));
    if (!same) {
      ok = false;
      detail.push_back(p.str() + ": series identities fail");
    }
  }
  report(5, ok,
         "Poincare series identities on " + std::to_string(checked) +
             " weights with sum at most 20",
         detail);
}

void criterion_6_representability() {
  std::vector<std::string> detail;
  bool ok = true;
  unsigned checked = 0;
  for (const WeightSequence& p : enumerate_weights(14, 13, 7)) {
    ++checked;
    if (represent_transform(q_poly(p)) != square_subst(extended_coxeter_poly(p))) {
      ok = false;
      detail.push_back(p.str() + ": represent transform mismatch");
    }
  }
  IntPoly x = IntPoly::variable();
  for (unsigned k = 4; k <= 10; ++k) {
    if (q_poly(WeightSequence({2, 3, k})) !=
        x * q_poly(WeightSequence({2, 3, k - 1})) - q_poly(WeightSequence({2, 3, k - 2}))) {
      ok = false;
      detail.push_back("(2,3," + std::to_string(k) + "): chain recursion fails");
    }
    if (q_poly(WeightSequence({2, 2, 2, k})) !=
        x * q_poly(WeightSequence({2, 2, 2, k - 1})) -
            q_poly(WeightSequence({2, 2, 2, k - 2}))) {
      ok = false;
      detail.push_back("(2,2,2," + std::to_string(k) + "): chain recursion fails");
    }
  }
  report(6, ok,
         "representability on " + std::to_string(checked) +
             " weights with sum at most 14; Chebyshev chains up to k = 10",
         detail);
}

void criterion_7_matrices() {
  std::vector<std::string> detail;
  bool ok = true;
  unsigned checked = 0;
  for (const WeightSequence& p : enumerate_weights(12, 11, 6)) {
    ++checked;
    if (char_poly(coxeter_matrix(cartan_canonical(p))) != canonical_coxeter_poly(p)) {
      ok = false;
      detail.push_back(p.str() + ": canonical matrix polynomial mismatch");
    }
    IntPoly f_hat = extended_coxeter_poly(p);
    std::size_t n = cartan_canonical(p).matrix.size();
    for (std::size_t v = 0; v < n; ++v) {
      if (char_poly(coxeter_matrix(cartan_extended(p, v))) != f_hat) {
        ok = false;
        detail.push_back(p.str() + ": extension at vertex " + std::to_string(v) +
                         " changes the polynomial");
        break;
      }
    }
  }
  report(7, ok,
         "Coxeter matrix agrees with the closed forms on " + std::to_string(checked) +
             " weights, any extension vertex",
         detail);
}

void criterion_8_identities() {
  std::vector<std::string> detail;
  bool ok = true;

  auto check = [&](bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail.push_back(what);
    }
  };

  check(extended_coxeter_poly(WeightSequence({2, 3, 6})) ==
            canonical_coxeter_poly(WeightSequence({2, 3, 7})),
        "(2,3,6) tubular identity");
  check(extended_coxeter_poly(WeightSequence({2, 4, 4})) ==
            canonical_coxeter_poly(WeightSequence({2, 4, 5})),
        "(2,4,4) tubular identity");
  check(extended_coxeter_poly(WeightSequence({3, 3, 3})) ==
            canonical_coxeter_poly(WeightSequence({3, 3, 4})),
        "(3,3,3) tubular identity");
  check(extended_coxeter_poly(WeightSequence({2, 2, 2, 2})) ==
            canonical_coxeter_poly(WeightSequence({2, 2, 2, 3})),
        "(2,2,2,2) tubular identity");

  auto star = [](std::vector<unsigned> bracket) {
    std::vector<unsigned> arms;
    for (unsigned b : bracket) arms.push_back(b - 1);
    return tree_coxeter_poly(star_tree(arms));
  };
  check(extended_coxeter_poly(WeightSequence({2, 3, 3})) == star({3, 3, 4}),
        "(2,3,3) domestic identity");
  check(extended_coxeter_poly(WeightSequence({2, 3, 4})) == star({2, 4, 5}),
        "(2,3,4) domestic identity");
  check(extended_coxeter_poly(WeightSequence({2, 3, 5})) == star({2, 3, 7}),
        "(2,3,5) domestic identity");

  report(8, ok, "tubular and domestic closed-form identities", detail);
}

void criterion_9_classifications(const std::vector<WildData>& wild) {
  std::vector<std::string> detail;
  bool ok = true;

  std::set<std::vector<unsigned>> registry_weights;
  for (const auto& rec : hypersurface_registry()) registry_weights.insert(rec.weight.parts());

  std::set<std::vector<unsigned>> three_gen_weights, non_periodic;
  for (const auto& w : wild) {
    if (w.has_decomposition != w.on_circle) {
      ok = false;
      detail.push_back(w.p.str() + ": decomposition existence disagrees with root location");
    }
    if (w.top_cyclotomic != w.three_gen) {
      ok = false;
      detail.push_back(w.p.str() + ": periodicity predicate disagrees with three-generation");
    }
    if (w.three_gen) three_gen_weights.insert(w.p.parts());
    if (w.on_circle && !w.period.finite) non_periodic.insert(w.p.parts());
  }

  if (three_gen_weights != registry_weights) {
    ok = false;
    detail.push_back("three-generated weights differ from the 22 registry weights");
  }
  if (non_periodic != std::set<std::vector<unsigned>>{{3, 3, 3, 3}, {2, 2, 2, 2, 4}}) {
    ok = false;
    detail.push_back("non-periodic circle-rooted weights differ from the known two");
  }

  report(9, ok, "decomposition, three-generation, and periodicity classifications", detail);
}

void criterion_10_records() {
  std::vector<std::string> detail;
  bool ok = true;

  unsigned passing = 0;
  for (const auto& rec : hypersurface_registry()) {
    RecordCheck check = verify_record(rec);
    bool misprinted = rec.weight == WeightSequence({2, 3, 9}) ||
                      rec.weight == WeightSequence({2, 4, 6});
    if (check.all()) {
      ++passing;
      if (misprinted) {
        ok = false;
        detail.push_back(rec.name + ": expected the bundled record to fail");
      }
      continue;
    }
    if (!misprinted) {
      ok = false;
      detail.push_back(rec.name + ": bundled record unexpectedly fails");
      continue;
    }
    if (check.homogeneous) {
      ok = false;
      detail.push_back(rec.name + ": expected a homogeneity failure");
    }
    auto fix = derive_correction(rec);
    if (!fix || !verify_record(*fix).all()) {
      ok = false;
      detail.push_back(rec.name + ": no verifiable correction found");
    } else {
      detail.push_back(rec.name + ": corrected to " + relation_str(*fix) + " of degree " +
                       std::to_string(fix->rel_degree));
    }
  }
  if (passing != 20) {
    ok = false;
    detail.push_back(std::to_string(passing) + " records pass instead of 20");
  }

  report(10, ok, "hypersurface records: 20 verify, 2 misprints corrected", detail);
}

void criterion_11_tits() {
  std::vector<std::string> detail;
  bool ok = true;
  unsigned checked = 0;
  for (const WeightSequence& p : enumerate_weights(16, 15, 8)) {
    ++checked;
    if (tits_form(p, wildness_witness(p)) != -1) {
      ok = false;
      detail.push_back(p.str() + ": witness value differs from -1");
    }
  }
  report(11, ok,
         "Tits form witness equals -1 on " + std::to_string(checked) +
             " weights of every type",
         detail);
}

void criterion_12_value(const std::vector<WildData>& wild) {
  std::vector<std::string> detail;
  bool ok = true;
  for (const auto& w : wild) {
    Rat rhs = Rat(w.p.t()) - 2;
    Int prod = 1;
    for (unsigned pi : w.p.parts()) {
      rhs -= Rat(1, pi);
      prod *= pi;
    }
    if (Rat(w.f_hat.eval(Int(1))) != rhs * Rat(prod)) {
      ok = false;
      detail.push_back(w.p.str() + ": value at one differs");
    }
    if (poincare_closed(w.p).pole_order_at_one() != 2) {
      ok = false;
      detail.push_back(w.p.str() + ": pole order differs from 2");
    }
  }
  report(12, ok, "value of f_hat at 1 and the order-two pole of the series", detail);
}

}  // namespace

int main() {
  std::vector<WildData> wild;
  for (const WeightSequence& p : enumerate_wild(18, 13, 8)) {
    WildData w{p, extended_coxeter_poly(p)};
    w.on_circle = roots_on_circle(p);
    w.in_list = in_circle_list(p);
    w.off = off_circle_count(p);
    auto dec = formal_decomposition(p);
    w.has_decomposition = dec.has_value();
    w.three_gen = dec && dec->d.size() == 3;
    w.top_cyclotomic = periodic_with_top_cyclotomic(p);
    w.period = coxeter_period(p);
    w.generator_count = support_monoid(p).generators.size();
    wild.push_back(std::move(w));
  }

  guard(1, [&] { criterion_1_table2(wild); });
  guard(2, [&] { criterion_2_table1(); });
  guard(3, [&] { criterion_3_table3(wild); });
  guard(4, [&] { criterion_4_circle(wild); });
  guard(5, [&] { criterion_5_series(); });
  guard(6, [&] { criterion_6_representability(); });
  guard(7, [&] { criterion_7_matrices(); });
  guard(8, [&] { criterion_8_identities(); });
  guard(9, [&] { criterion_9_classifications(wild); });
  guard(10, [&] { criterion_10_records(); });
  guard(11, [&] { criterion_11_tits(); });
  guard(12, [&] { criterion_12_value(wild); });

  if (failures == 0) {
    std::printf("all criteria pass\n");
    return 0;
  }
  std::printf("%d criterion(s) fail\n", failures);
  return 1;
}
