#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxalg/types.hpp"

namespace coxalg::reference {

using CycloList = std::vector<std::pair<unsigned, unsigned>>;

// Reference data, transcribed as printed. Known misprints are kept verbatim
// so that recomputation can locate and annotate them.

// Minimal wild weights: factorization of f_hat into cyclotomics and a
// Salem-like tail, the spectral radius to four decimals, the Dynkin index.
// One row label repeats a non-minimal weight; `actual` resolves the weight
// the data belongs to (equal to `label` everywhere else).
struct Table1Row {
  std::vector<unsigned> label;
  std::vector<unsigned> actual;
  CycloList cyclo;              // cyclotomic part as printed
  std::vector<long long> tail;  // non-cyclotomic factor, coefficients from T^0
  bool tail_misprint_known;     // a duplicated-term misprint, resolved elsewhere
  bool label_mismatch;
  std::string rho;              // four decimals as printed
  unsigned dynkin_index;
};
const std::vector<Table1Row>& table1();

// Wild weights whose f_hat is a cyclotomic product: factorization, the
// degrees (d) and (c) of the formal decomposition, the Coxeter period.
struct Table2Row {
  std::vector<unsigned> weight;
  CycloList cyclo;  // factorization of f_hat as printed
  std::vector<unsigned> d;
  std::vector<unsigned> c;
  bool period_finite;
  unsigned long period;     // meaningful when finite
  bool hypersurface_mark;   // row carries the t = 3 singularity marker
  bool t4_mark;             // row carries the t >= 4 marker
  bool boxed;               // highlighted as non-periodic
};
const std::vector<Table2Row>& table2();

// Support monoids of small wild weights: Frobenius number and generators.
// Two rows repeat an earlier label; `actual` resolves which weight the data
// belongs to (equal to `label` everywhere else).
struct Table3Row {
  std::vector<unsigned> label;
  std::vector<unsigned> actual;
  unsigned frobenius;
  std::vector<unsigned> generators;
  bool label_collision;
};
const std::vector<Table3Row>& table3();

std::optional<Table1Row> table1_find(const std::vector<unsigned>& weight);
std::optional<Table2Row> table2_find(const std::vector<unsigned>& weight);

}  // namespace coxalg::reference
