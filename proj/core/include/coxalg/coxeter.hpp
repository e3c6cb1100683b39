#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxalg/cyclotomic.hpp"
#include "coxalg/sturm.hpp"
#include "coxalg/weights.hpp"

namespace coxalg {

// Coxeter polynomial of the star quiver [p]: degree 1 + sum (p_i - 1).
IntPoly star_coxeter_poly(const WeightSequence& p);

// Coxeter polynomial of the canonical algebra: (T-1)^2 prod v_{p_i}.
IntPoly canonical_coxeter_poly(const WeightSequence& p);

// Coxeter polynomial of the extended canonical algebra:
// (1+T) f_C - T f_[p]; monic, constant term 1, degree 3 + sum (p_i - 1).
IntPoly extended_coxeter_poly(const WeightSequence& p);

// Undirected tree on vertices 0..n-1.
struct Tree {
  unsigned n = 0;
  std::vector<std::pair<unsigned, unsigned>> edges;
};

// Star tree with a center and one arm of arm_lengths[i] extra vertices per
// entry. The star attached to weights p has arms of p_i - 1 vertices, so the
// bracket notation [a,b,c] means arms of a-1, b-1, c-1 vertices.
Tree star_tree(const std::vector<unsigned>& arm_lengths);

// Coxeter polynomial of a tree quiver; independent of edge orientation.
IntPoly tree_coxeter_poly(const Tree& tree);

// Characteristic polynomial u_k of the adjacency matrix of a path on k
// vertices: u_0 = 1, u_1 = x, u_{k+1} = x u_k - u_{k-1}.
IntPoly path_char_poly(unsigned k);

// Characteristic polynomial of the adjacency matrix of the star tree of p.
IntPoly star_adjacency_char_poly(const WeightSequence& p);

// Integer polynomial q with represent_transform(q) = f_hat(T^2):
// q = x (x^2 - 4) prod u_{p_i - 1} - star adjacency char poly.
IntPoly q_poly(const WeightSequence& p);

// T^{deg q} * q(T + 1/T), degree doubles.
IntPoly represent_transform(const IntPoly& q);

// True when every root of the extended Coxeter polynomial lies on the unit
// circle (equivalently, the polynomial is a product of cyclotomics).
bool roots_on_circle(const WeightSequence& p);

// Number of roots of the extended Coxeter polynomial off the unit circle,
// counted with multiplicity.
unsigned off_circle_count(const WeightSequence& p);

struct SpectralRadius {
  RatInterval interval;        // certified enclosure of the spectral radius
  bool on_circle = false;      // radius is exactly 1
  bool dominant_real = false;  // radius attained by a real pair x, 1/x
  bool complex_quadruple = false;  // attained only by a complex quadruple

  std::string decimal(unsigned digits = 4) const;
};

// Certified enclosure of the largest root modulus of the extended Coxeter
// polynomial; the interval width is at most tol.
SpectralRadius spectral_radius(const WeightSequence& p, const Rat& tol = Rat(1, 10000000));

struct Period {
  bool finite = false;
  unsigned long value = 0;  // meaningful only when finite

  static Period infinite() { return {}; }
  static Period of(unsigned long v) { return {true, v}; }
  bool operator==(const Period& o) const = default;
  std::string str() const;
};

// Multiplicative order of the Coxeter matrix of the extended canonical
// algebra, or infinite.
Period coxeter_period(const WeightSequence& p);

// True when the period is finite, say d, and phi_d divides the extended
// Coxeter polynomial.
bool periodic_with_top_cyclotomic(const WeightSequence& p);

struct CoxeterReport {
  WeightSequence weight;
  IntPoly f_hat;
  CycloFactorization factorization;
  bool on_circle = false;
  unsigned off_circle = 0;
  SpectralRadius spectral;
  Period period;
};

CoxeterReport coxeter_report(const WeightSequence& p);

}  // namespace coxalg
