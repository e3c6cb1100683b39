#include <doctest.h>

#include <algorithm>
#include <set>

#include "coxalg/weights.hpp"

namespace coxalg {
namespace {

TEST_CASE("parsing and normalization") {
  auto p = WeightSequence::parse("2,3,7");
  REQUIRE(p.has_value());
  CHECK(p->parts() == std::vector<unsigned>{2, 3, 7});
  CHECK(p->str() == "(2,3,7)");
  CHECK(p->csv() == "2,3,7");

  CHECK(WeightSequence::parse("7,3,2") == p);       // sorted
  CHECK(WeightSequence::parse("1,2,3,1")->parts() ==
        std::vector<unsigned>{2, 3});                // ones dropped

  CHECK_FALSE(WeightSequence::parse("").has_value());
  CHECK_FALSE(WeightSequence::parse("2").has_value());   // one entry left
  CHECK_FALSE(WeightSequence::parse("1,1").has_value());
  CHECK_FALSE(WeightSequence::parse("0,2").has_value());
  CHECK_FALSE(WeightSequence::parse("2,x").has_value());
  CHECK(WeightSequence::parse("2, 3 , 7") == p);  // separators are lenient
}

TEST_CASE("basic accessors") {
  WeightSequence p({2, 3, 7});
  CHECK(p.t() == 3);
  CHECK(p.sum() == 12);
  CHECK(p.sum_minus_t() == 9);
  CHECK(euler_char(p) == Rat(-1, 42));
  CHECK(euler_char(WeightSequence({2, 3, 6})) == 0);
  CHECK(euler_char(WeightSequence({2, 2})) == 1);
}

TEST_CASE("classification by the sign of the Euler characteristic") {
  CHECK(classify(WeightSequence({2, 3})) == ReprType::Domestic);
  CHECK(classify(WeightSequence({2, 2, 17})) == ReprType::Domestic);
  CHECK(classify(WeightSequence({2, 3, 5})) == ReprType::Domestic);

  for (auto parts : {std::vector<unsigned>{2, 3, 6}, {2, 4, 4}, {3, 3, 3}, {2, 2, 2, 2}})
    CHECK(classify(WeightSequence(parts)) == ReprType::Tubular);

  CHECK(classify(WeightSequence({2, 3, 7})) == ReprType::Wild);
  CHECK(classify(WeightSequence({2, 2, 2, 3})) == ReprType::Wild);

  // Tubular weights are exactly those four.
  for (const WeightSequence& p : enumerate_weights(16, 15, 8)) {
    bool tubular = classify(p) == ReprType::Tubular;
    bool listed = p == WeightSequence({2, 3, 6}) || p == WeightSequence({2, 4, 4}) ||
                  p == WeightSequence({3, 3, 3}) || p == WeightSequence({2, 2, 2, 2});
    CHECK(tubular == listed);
  }
}

TEST_CASE("domination pads with ones on the left") {
  WeightSequence small({2, 3, 7}), big({2, 3, 8});
  CHECK(dominates(small, big));
  CHECK_FALSE(dominates(big, small));
  CHECK(dominates(small, small));
  CHECK_FALSE(strictly_dominated_by(small, small));
  CHECK(strictly_dominated_by(small, big));

  // (2,3,7) <= (2,2,3,7) after padding to (1,2,3,7).
  CHECK(dominates(WeightSequence({2, 3, 7}), WeightSequence({2, 2, 3, 7})));
  CHECK_FALSE(dominates(WeightSequence({2, 2, 3, 7}), WeightSequence({2, 3, 7})));
  // Incomparable pair.
  CHECK_FALSE(dominates(WeightSequence({2, 5, 5}), WeightSequence({3, 3, 4})));
  CHECK_FALSE(dominates(WeightSequence({3, 3, 4}), WeightSequence({2, 5, 5})));
}

TEST_CASE("dynkin labels and indices") {
  CHECK(dynkin_index(DynkinLabel::L2222) == 2);
  CHECK(dynkin_index(DynkinLabel::L333) == 3);
  CHECK(dynkin_index(DynkinLabel::L244) == 4);
  CHECK(dynkin_index(DynkinLabel::L236) == 6);
  CHECK(dynkin_name(DynkinLabel::L2222) == "[2,2,2,2]");
  CHECK(dynkin_name(DynkinLabel::L236) == "[2,3,6]");

  CHECK(dynkin_label(WeightSequence({2, 3, 7})) == DynkinLabel::L236);
  CHECK(dynkin_label(WeightSequence({2, 4, 5})) == DynkinLabel::L244);
  CHECK(dynkin_label(WeightSequence({3, 3, 4})) == DynkinLabel::L333);
  // Several shapes fit under (4,4,6); the label picks the smallest index.
  CHECK(dynkin_label(WeightSequence({4, 4, 6})) == DynkinLabel::L333);
  CHECK(dynkin_label(WeightSequence({2, 2, 2, 3})) == DynkinLabel::L2222);
  CHECK(dynkin_label(WeightSequence({2, 3, 4, 4})) == DynkinLabel::L2222);

  // The label is the minimal wild star shape dominated by p.
  for (const WeightSequence& p : enumerate_wild(14, 13, 8)) {
    DynkinLabel l = dynkin_label(p);
    CHECK(dominates(WeightSequence(dynkin_parts(l)), p));
    for (DynkinLabel other : {DynkinLabel::L2222, DynkinLabel::L333,
                              DynkinLabel::L244, DynkinLabel::L236})
      if (dynkin_index(other) < dynkin_index(l))
        CHECK_FALSE(dominates(WeightSequence(dynkin_parts(other)), p));
  }
}

TEST_CASE("critical list") {
  const auto& crit = critical_list();
  REQUIRE(crit.size() == 18);
  for (const WeightSequence& c : crit) CHECK(classify(c) == ReprType::Wild);
  // Pairwise incomparable under domination.
  for (const WeightSequence& a : crit)
    for (const WeightSequence& b : crit)
      if (!(a == b)) CHECK_FALSE(dominates(a, b));
  CHECK(std::find(crit.begin(), crit.end(), WeightSequence({2, 3, 11})) != crit.end());
  CHECK(std::find(crit.begin(), crit.end(), WeightSequence({2, 2, 2, 2, 2, 2, 2})) != crit.end());
}

TEST_CASE("membership in the circle list") {
  CHECK(in_circle_list(WeightSequence({2, 3, 7})));
  CHECK(in_circle_list(WeightSequence({2, 3, 10})));
  CHECK_FALSE(in_circle_list(WeightSequence({2, 3, 11})));   // critical itself
  CHECK_FALSE(in_circle_list(WeightSequence({2, 3, 12})));
  CHECK(in_circle_list(WeightSequence({2, 2, 2, 2, 2, 2})));
  CHECK_FALSE(in_circle_list(WeightSequence({2, 2, 2, 2, 2, 2, 2})));

  // Exactly 38 wild sequences lie below a critical one.
  unsigned count = 0;
  for (const WeightSequence& p : enumerate_wild(18, 13, 8))
    if (in_circle_list(p)) ++count;
  CHECK(count == 38);
}

TEST_CASE("enumeration bounds and order") {
  auto all = enumerate_weights(8, 7, 4);
  CHECK(std::is_sorted(all.begin(), all.end(),
                       [](const WeightSequence& a, const WeightSequence& b) {
                         return a.parts() < b.parts();
                       }));
  std::set<std::vector<unsigned>> seen;
  for (const WeightSequence& p : all) {
    CHECK(p.sum() <= 8);
    CHECK(p.t() <= 4);
    CHECK(p.parts().back() <= 7);
    CHECK(seen.insert(p.parts()).second);  // no duplicates
  }
  CHECK(seen.count({2, 2}) == 1);
  CHECK(seen.count({2, 3, 3}) == 1);
  CHECK(seen.count({2, 2, 2, 2}) == 1);

  CHECK(enumerate_wild(18, 13, 8).size() == 282);
  for (const WeightSequence& p : enumerate_wild(18, 13, 8))
    CHECK(classify(p) == ReprType::Wild);
}

}  // namespace
}  // namespace coxalg
