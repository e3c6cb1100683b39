#include "coxalg/reference.hpp"

namespace coxalg::reference {

namespace {

using W = std::vector<unsigned>;
using C = CycloList;
using T = std::vector<long long>;
using G = std::vector<unsigned>;

Table1Row t1(W w, C cyc, T tail, const char* rho, unsigned idx) {
  return Table1Row{w, w, std::move(cyc), std::move(tail), false, false, rho, idx};
}

Table2Row t2(W w, C cyc, G d, G c, unsigned period, int mark, bool boxed = false) {
  return Table2Row{std::move(w), std::move(cyc), std::move(d), std::move(c),
                   period != 0,  period,          mark == 1,   mark == 2,
                   boxed};
}

Table3Row t3(W w, unsigned frob, G gens) {
  return Table3Row{w, w, frob, std::move(gens), false};
}

}  // namespace

const std::vector<Table1Row>& table1() {
  static const std::vector<Table1Row> rows = [] {
    std::vector<Table1Row> r;
    r.push_back(t1({2, 3, 11}, {},
                   {1, 1, 0, -1, -1, 0, 1, 1, 0, 1, 1, 0, -1, -1, 0, 1, 1},
                   "1.1064", 6));
    r.push_back(t1({2, 4, 9}, {{2, 1}, {5, 1}},
                   {1, 1, 0, 0, 0, 1, 0, 0, 0, -1, 1}, "1.1329", 4));
    r.push_back(t1({2, 5, 8}, {},
                   {1, 1, 0, 0, 1, 1, 1, 0, 2, 1, 1, 1, 0, 0, 1, 1},
                   "1.1574", 4));
    r.push_back(t1({2, 6, 7}, {},
                   {1, 1, 0, 0, 1, 2, 2, 1, 1, 2, 2, 1, 0, 0, 1, 1},
                   "1.1669", 4));
    r.push_back(t1({3, 3, 8}, {},
                   {1, 1, 1, 0, 0, 1, 2, 3, 2, 1, 0, 0, 1, 1, 1}, "1.1498",
                   3));
    r.push_back(t1({3, 4, 7}, {},
                   {1, 1, 1, 1, 1, 2, 3, 3, 3, 2, 1, 1, 1, 1, 1}, "1.1847",
                   3));
    r.push_back(t1({3, 5, 6}, {{3, 1}},
                   {1, 0, 0, 1, 1, 1, 1, 1, 1, 1, 0, 0, 1}, "1.1966", 3));
    r.push_back(t1({4, 4, 6}, {{2, 1}, {4, 1}},
                   {1, -1, 1, 0, 1, 0, 1, 0, 1, -1, 1}, "1.2715", 3));
    r.push_back(t1({4, 5, 5}, {{5, 1}}, {1, 0, 0, 1, 1, 1, 1, 1, 0, 0, 1},
                   "1.2277", 3));
    r.push_back(t1({2, 2, 2, 7}, {{2, 2}}, {1, 0, 0, 0, 1, 1, 1, 0, 0, 0, 1},
                   "1.1670", 2));
    r.push_back(t1({2, 2, 3, 6}, {{2, 2}, {3, 1}}, {1, -1, 1, 0, 1, 0, 1, -1, 1},
                   "1.2196", 2));
    // Printed with the label (2,3,3,4); the data belongs to (2,3,4,4).
    {
      Table1Row row = t1({2, 3, 4, 4}, {{2, 1}, {4, 1}},
                         {1, 0, 1, 1, 2, 1, 1, 0, 1}, "1.2874", 2);
      row.label = {2, 3, 3, 4};
      row.label_mismatch = true;
      r.push_back(std::move(row));
    }
    r.push_back(t1({3, 3, 3, 4}, {{3, 2}}, {1, 0, 1, 2, 0, 2, 1, 0, 1},
                   "1.3307", 2));
    // Printed tail carries a duplicated term; kept verbatim, summed per power.
    {
      Table1Row row = t1({2, 2, 2, 2, 5}, {{2, 3}}, {1, 0, 1, 2, 2, 0, 1, 0, 1},
                         "1.2874", 2);
      row.tail_misprint_known = true;
      r.push_back(std::move(row));
    }
    r.push_back(t1({2, 2, 2, 3, 4}, {{2, 3}}, {1, 0, 2, 0, 3, 1, 2, 0, 1},
                   "1.3351", 2));
    r.push_back(t1({2, 2, 3, 3, 3}, {{2, 1}, {3, 2}}, {1, 0, 1, 2, 1, 0, 1},
                   "1.3765", 2));
    r.push_back(t1({2, 2, 2, 2, 2, 3}, {{2, 4}}, {1, 0, 2, 1, 2, 0, 1},
                   "1.3395", 2));
    r.push_back(t1({2, 2, 2, 2, 2, 2, 2}, {{2, 6}}, {1, -1, 3, -1, 1},
                   "1.5392", 2));
    return r;
  }();
  return rows;
}

const std::vector<Table2Row>& table2() {
  static const std::vector<Table2Row> rows = [] {
    std::vector<Table2Row> r;
    r.push_back(t2({2, 3, 7}, {{42, 1}}, {6, 14, 21}, {42}, 42, 1));
    r.push_back(t2({2, 3, 8}, {{2, 1}, {10, 1}, {30, 1}}, {6, 8, 15}, {30}, 30, 1));
    r.push_back(t2({2, 3, 9}, {{3, 1}, {12, 1}, {24, 1}}, {6, 8, 9}, {24}, 24, 1));
    r.push_back(t2({2, 3, 10}, {{2, 1}, {16, 1}, {18, 1}}, {6, 8, 9, 10},
                   {16, 18}, 72, 0));
    r.push_back(t2({2, 4, 5}, {{2, 1}, {6, 1}, {30, 1}}, {4, 10, 15}, {30}, 30, 1));
    r.push_back(t2({2, 4, 6}, {{2, 2}, {22, 1}}, {4, 6, 11}, {22}, 22, 1));
    r.push_back(t2({2, 4, 7}, {{2, 1}, {9, 1}, {18, 1}}, {4, 6, 7}, {18}, 18, 1));
    r.push_back(t2({2, 4, 8}, {{2, 2}, {4, 1}, {12, 1}, {14, 1}}, {4, 6, 7, 8},
                   {12, 14}, 84, 0));
    r.push_back(t2({2, 5, 5}, {{5, 1}, {20, 1}}, {4, 5, 10}, {20}, 20, 1));
    r.push_back(t2({2, 5, 6}, {{2, 1}, {8, 1}, {16, 1}}, {4, 5, 6}, {16}, 16, 1));
    r.push_back(t2({2, 5, 7}, {{11, 1}, {12, 1}}, {4, 5, 6, 7}, {11, 12}, 132, 0));
    r.push_back(t2({2, 6, 6}, {{2, 2}, {3, 1}, {6, 1}, {10, 1}, {12, 1}},
                   {4, 5, 6, 6}, {10, 12}, 60, 0));
    r.push_back(t2({3, 3, 4}, {{3, 1}, {24, 1}}, {3, 8, 12}, {24}, 24, 1));
    r.push_back(t2({3, 3, 5}, {{2, 1}, {3, 1}, {6, 1}, {18, 1}}, {3, 5, 9},
                   {18}, 18, 1));
    r.push_back(t2({3, 3, 6}, {{3, 2}, {15, 1}}, {3, 5, 6}, {15}, 15, 1));
    r.push_back(t2({3, 3, 7}, {{2, 1}, {3, 1}, {4, 1}, {10, 1}, {12, 1}},
                   {3, 5, 6, 7}, {10, 12}, 60, 0));
    r.push_back(t2({3, 4, 4}, {{2, 1}, {4, 1}, {16, 1}}, {3, 4, 8}, {16}, 16, 1));
    r.push_back(t2({3, 4, 5}, {{13, 1}}, {3, 4, 5}, {13}, 13, 1));
    r.push_back(t2({3, 4, 6}, {{2, 1}, {3, 1}, {9, 1}, {10, 1}}, {3, 4, 5, 6},
                   {9, 10}, 90, 0));
    r.push_back(t2({3, 5, 5}, {{2, 1}, {5, 1}, {8, 1}, {10, 1}}, {3, 4, 5, 5},
                   {8, 10}, 40, 0));
    r.push_back(t2({4, 4, 4}, {{2, 2}, {4, 2}, {6, 1}, {12, 1}}, {3, 4, 4},
                   {12}, 12, 1));
    r.push_back(t2({4, 4, 5}, {{2, 1}, {4, 1}, {8, 1}, {9, 1}}, {3, 4, 4, 5},
                   {8, 9}, 72, 0));
    r.push_back(t2({2, 2, 2, 3}, {{2, 2}, {18, 1}}, {2, 6, 9}, {18}, 18, 2));
    r.push_back(t2({2, 2, 2, 4}, {{2, 2}, {14, 1}}, {2, 4, 7}, {14}, 14, 2));
    r.push_back(t2({2, 2, 2, 5}, {{2, 2}, {3, 1}, {6, 1}, {12, 1}}, {2, 4, 5},
                   {12}, 12, 2));
    r.push_back(t2({2, 2, 2, 6}, {{2, 2}, {8, 1}, {10, 1}}, {2, 4, 5, 6},
                   {8, 10}, 40, 0));
    r.push_back(t2({2, 2, 3, 3}, {{2, 1}, {3, 1}, {4, 1}, {12, 1}}, {2, 3, 6},
                   {12}, 12, 2));
    r.push_back(t2({2, 2, 3, 4}, {{2, 2}, {5, 1}, {10, 1}}, {2, 3, 4}, {10}, 10, 2));
    r.push_back(t2({2, 2, 3, 5}, {{2, 1}, {7, 1}, {8, 1}}, {2, 3, 4, 5},
                   {7, 8}, 56, 0));
    r.push_back(t2({2, 2, 4, 4}, {{2, 2}, {4, 1}, {6, 1}, {8, 1}}, {2, 3, 4, 4},
                   {6, 8}, 24, 0));
    r.push_back(t2({2, 3, 3, 3}, {{3, 2}, {9, 1}}, {2, 3, 3}, {9}, 9, 2));
    r.push_back(t2({2, 3, 3, 4}, {{2, 1}, {3, 1}, {6, 1}, {7, 1}}, {2, 3, 3, 4},
                   {6, 7}, 42, 0));
    r.push_back(t2({3, 3, 3, 3}, {{2, 1}, {3, 3}, {6, 2}}, {2, 3, 3, 3},
                   {6, 6}, 0, 0, true));
    r.push_back(t2({2, 2, 2, 2, 2}, {{2, 4}, {10, 1}}, {2, 2, 5}, {10}, 10, 2));
    r.push_back(t2({2, 2, 2, 2, 3}, {{2, 3}, {4, 1}, {8, 1}}, {2, 2, 3}, {8}, 8, 2));
    r.push_back(t2({2, 2, 2, 2, 4}, {{2, 2}, {3, 1}, {6, 2}}, {2, 2, 3, 4},
                   {6, 6}, 0, 0, true));
    r.push_back(t2({2, 2, 2, 3, 3}, {{2, 2}, {3, 1}, {5, 1}, {6, 1}},
                   {2, 2, 3, 3}, {5, 6}, 30, 0));
    r.push_back(t2({2, 2, 2, 2, 2, 2}, {{2, 5}, {4, 1}, {6, 1}}, {2, 2, 2, 3},
                   {4, 6}, 12, 0));
    return r;
  }();
  return rows;
}

const std::vector<Table3Row>& table3() {
  static const std::vector<Table3Row> rows = [] {
    std::vector<Table3Row> r;
    r.push_back(t3({2, 3, 7}, 43, {6, 14, 21}));
    r.push_back(t3({2, 3, 8}, 25, {6, 8, 15}));
    r.push_back(t3({2, 3, 9}, 19, {6, 8, 9}));
    r.push_back(t3({2, 3, 10}, 13, {6, 8, 9, 10}));
    r.push_back(t3({2, 3, 11}, 13, {6, 8, 9, 10, 11}));
    r.push_back(t3({2, 3, 12}, 13, {6, 8, 9, 10, 11}));
    r.push_back(t3({2, 3, 13}, 7, {6, 8, 9, 10, 11, 13}));
    r.push_back(t3({2, 4, 5}, 21, {4, 10, 15}));
    r.push_back(t3({2, 4, 6}, 13, {4, 6, 11}));
    r.push_back(t3({2, 4, 7}, 9, {4, 6, 7}));
    r.push_back(t3({2, 4, 8}, 9, {4, 6, 7}));
    r.push_back(t3({2, 4, 9}, 5, {4, 6, 7, 9}));
    r.push_back(t3({2, 5, 5}, 11, {4, 5}));
    r.push_back(t3({2, 5, 6}, 7, {4, 5, 6}));
    r.push_back(t3({2, 5, 7}, 3, {4, 5, 6, 7}));
    r.push_back(t3({2, 6, 6}, 7, {4, 5, 6}));
    r.push_back(t3({2, 6, 7}, 3, {4, 5, 6, 7}));
    r.push_back(t3({3, 3, 4}, 13, {3, 8}));
    r.push_back(t3({3, 3, 5}, 7, {3, 5}));
    r.push_back(t3({3, 3, 6}, 7, {3, 5}));
    r.push_back(t3({3, 3, 7}, 4, {3, 5, 7}));
    // Printed with repeated labels (3,3,4) and (3,3,5); the data belongs to
    // (3,4,4) and (3,4,5).
    {
      Table3Row row = t3({3, 4, 4}, 5, {3, 4});
      row.label = {3, 3, 4};
      row.label_collision = true;
      r.push_back(std::move(row));
    }
    {
      Table3Row row = t3({3, 4, 5}, 2, {3, 4, 5});
      row.label = {3, 3, 5};
      row.label_collision = true;
      r.push_back(std::move(row));
    }
    r.push_back(t3({4, 4, 4}, 5, {3, 4}));
    r.push_back(t3({4, 4, 5}, 2, {3, 4, 5}));
    r.push_back(t3({2, 2, 2, 3}, 7, {2, 9}));
    r.push_back(t3({2, 2, 2, 4}, 5, {2, 7}));
    r.push_back(t3({2, 2, 2, 5}, 3, {2, 5}));
    r.push_back(t3({2, 2, 3, 3}, 1, {2, 3}));
    r.push_back(t3({2, 2, 2, 2, 2}, 3, {2, 5}));
    r.push_back(t3({2, 2, 2, 2, 3}, 1, {2, 3}));
    r.push_back(t3({2, 2, 2, 2, 2, 2}, 1, {2, 3}));
    return r;
  }();
  return rows;
}

std::optional<Table1Row> table1_find(const std::vector<unsigned>& weight) {
  for (const auto& row : table1())
    if (row.actual == weight) return row;
  return std::nullopt;
}

std::optional<Table2Row> table2_find(const std::vector<unsigned>& weight) {
  for (const auto& row : table2())
    if (row.weight == weight) return row;
  return std::nullopt;
}

}  // namespace coxalg::reference
