#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "coxalg/intpoly.hpp"
#include "coxalg/weights.hpp"

namespace coxalg {

// Square integer matrix, row-major.
class IntMatrix {
 public:
  explicit IntMatrix(std::size_t n);
  static IntMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  Int& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix operator-() const;
  bool operator==(const IntMatrix& o) const = default;

  IntMatrix transpose() const;
  IntMatrix pow(unsigned long e) const;
  Int trace() const;

 private:
  std::size_t n_;
  std::vector<Int> a_;
};

// Cartan matrix of a canonical or extended canonical algebra together with
// the vertex labels. Vertex order: the source 0, then the arm vertices
// a_{i,j} (arm i = 1..t outer, position j = 1..p_i-1 inner), then the sink
// omega, and for the extended algebra the extension vertex star last.
struct CartanData {
  IntMatrix matrix;
  std::vector<std::string> labels;  // "v0", "a_1_1", ..., "omega", "star"
  bool extended = false;

  std::size_t omega_index() const { return labels.size() - (extended ? 2 : 1); }
  std::size_t star_index() const;  // extended only
};

CartanData cartan_canonical(const WeightSequence& p);

// One-point extension by an exceptional module; the column at star copies
// the column of the base vertex. Defaults to base = omega.
CartanData cartan_extended(const WeightSequence& p);
CartanData cartan_extended(const WeightSequence& p, std::size_t base_vertex);

// Exact inverse of an upper unitriangular matrix.
IntMatrix inverse_unitriangular(const IntMatrix& c);

// Coxeter matrix -(C^{-1})^T C acting on dimension row vectors.
IntMatrix coxeter_matrix(const CartanData& cartan);

// det(T*I - M) by the Faddeev-LeVerrier recurrence, exact.
IntPoly char_poly(const IntMatrix& m);

// Euler form <x, y> = x C^{-T} y^T on row vectors.
Int euler_form(const CartanData& cartan, const std::vector<Int>& x, const std::vector<Int>& y);

// Row vector times matrix.
std::vector<Int> apply_row(const std::vector<Int>& x, const IntMatrix& m);

// Tits quadratic form of the extended algebra's quiver with relations:
// sum of squares, minus arrow products, plus (t-2) x_0 x_omega for the
// relations of the canonical part.
Int tits_form(const WeightSequence& p, const std::vector<Int>& x);

// The standard negative vector: 2 on every canonical vertex, 1 on star.
// Throws if its Tits form value fails to be negative.
std::vector<Int> wildness_witness(const WeightSequence& p);

}  // namespace coxalg
