#include <doctest.h>

#include <algorithm>
#include <random>

#include "coxalg/sturm.hpp"

namespace coxalg {
namespace {

// Polynomial with the given rational roots (with multiplicity), scaled to
// integer coefficients.
IntPoly from_roots(const std::vector<Rat>& roots) {
  RatPoly f(IntPoly::constant(1));
  for (const Rat& r : roots) f = f * RatPoly({-r, Rat(1)});
  return f.primitive_integer();
}

unsigned count_distinct_in(const std::vector<Rat>& roots, const Rat& lo, const Rat& hi) {
  std::vector<Rat> seen;
  for (const Rat& r : roots)
    if (lo < r && r <= hi && std::find(seen.begin(), seen.end(), r) == seen.end())
      seen.push_back(r);
  return static_cast<unsigned>(seen.size());
}

unsigned count_with_multiplicity_closed(const std::vector<Rat>& roots, const Rat& lo, const Rat& hi) {
  unsigned n = 0;
  for (const Rat& r : roots)
    if (lo <= r && r <= hi) ++n;
  return n;
}

TEST_CASE("sturm_count against planted rational roots") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<int> count(1, 6);
  std::uniform_int_distribution<int> rep(0, 2);

  for (int trial = 0; trial < 80; ++trial) {
    std::vector<Rat> roots;
    int k = count(rng);
    for (int i = 0; i < k; ++i) {
      Rat r(num(rng), den(rng));
      roots.push_back(r);
      if (rep(rng) == 0) roots.push_back(r);  // occasional double root
    }
    IntPoly f = from_roots(roots);

    for (auto [lo, hi] : {std::pair<Rat, Rat>{-13, 13},
                          {-3, Rat(5, 2)},
                          {0, 12},
                          {-12, 0}}) {
      CHECK(sturm_count(f, lo, hi) == count_distinct_in(roots, lo, hi));
      CHECK(count_roots_closed(f, lo, hi) ==
            count_with_multiplicity_closed(roots, lo, hi));
    }
  }
}

TEST_CASE("interval convention at the endpoints") {
  IntPoly f = from_roots({Rat(1), Rat(2)});  // (T-1)(T-2)
  CHECK(sturm_count(f, 1, 2) == 1);   // 1 excluded, 2 included
  CHECK(sturm_count(f, 0, 1) == 1);
  CHECK(sturm_count(f, 1, Rat(3, 2)) == 0);
  CHECK(count_roots_closed(f, 1, 2) == 2);
  CHECK(count_roots_closed(f, 1, 1) == 1);
  CHECK(count_roots_closed(f, Rat(3, 2), Rat(7, 4)) == 0);
}

TEST_CASE("closed count respects multiplicity") {
  IntPoly f = from_roots({Rat(0), Rat(0), Rat(0), Rat(1, 2)});
  CHECK(count_roots_closed(f, -1, 1) == 4);
  CHECK(count_roots_closed(f, 0, 0) == 3);
  CHECK(sturm_count(f, -1, 1) == 2);
}

TEST_CASE("irrational roots are located correctly") {
  IntPoly f({-2, 0, 1});  // T^2 - 2
  CHECK(sturm_count(f, 0, 2) == 1);
  CHECK(sturm_count(f, -2, 2) == 2);
  CHECK(sturm_count(f, Rat(3, 2), 2) == 0);
  CHECK(sturm_count(f, 1, Rat(3, 2)) == 1);
}

TEST_CASE("refine_root brackets sqrt(2)") {
  IntPoly f({-2, 0, 1});
  RatInterval box = refine_root(f, {Rat(1), Rat(2)}, Rat(1, 1000000));
  CHECK(box.width() <= Rat(1, 1000000));
  // sqrt(2) in [lo, hi]: lo^2 <= 2 <= hi^2.
  CHECK(box.lo * box.lo <= 2);
  CHECK(box.hi * box.hi >= 2);
  CHECK(box.contains(box.mid()));
}

TEST_CASE("refine_root degenerates cleanly on an exact hit") {
  IntPoly f({-1, 0, 1});  // roots +-1
  RatInterval box = refine_root(f, {Rat(0), Rat(2)}, Rat(1, 1024));
  CHECK(box.contains(Rat(1)));
  CHECK(box.width() <= Rat(1, 1024));
}

TEST_CASE("isolate_real_roots separates the roots") {
  std::vector<Rat> roots = {Rat(-3), Rat(-1, 2), Rat(0), Rat(2), Rat(7, 3)};
  IntPoly f = from_roots(roots);
  auto boxes = isolate_real_roots(f, -10, 10);
  REQUIRE(boxes.size() == roots.size());
  std::sort(roots.begin(), roots.end());
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    CHECK(sturm_count(f, boxes[i].lo, boxes[i].hi) == 1);
    CHECK(boxes[i].lo < roots[i]);
    CHECK(roots[i] <= boxes[i].hi);
  }
}

TEST_CASE("cauchy bound dominates every root") {
  std::vector<Rat> roots = {Rat(-5), Rat(3), Rat(1, 3)};
  IntPoly f = from_roots(roots);
  Rat bound = cauchy_root_bound(f);
  for (const Rat& r : roots) CHECK(abs(r) < bound);
}

}  // namespace
}  // namespace coxalg
