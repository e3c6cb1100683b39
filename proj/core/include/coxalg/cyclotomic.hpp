#pragma once

#include <string>
#include <utility>
#include <vector>

#include "coxalg/intpoly.hpp"

namespace coxalg {

// v_n = 1 + T + ... + T^{n-1} = (T^n - 1)/(T - 1); n >= 1.
IntPoly v_poly(unsigned n);

int mobius(unsigned n);       // n >= 1
unsigned totient(unsigned n); // n >= 1
std::vector<unsigned> divisors(unsigned n);

// The n-th cyclotomic polynomial, cached across calls.
const IntPoly& cyclotomic(unsigned n);

struct CycloFactorization {
  // (index, multiplicity) pairs with strictly increasing index.
  std::vector<std::pair<unsigned, unsigned>> factors;
  IntPoly remainder;  // the non-cyclotomic part; 1 when fully cyclotomic

  bool fully_cyclotomic() const { return remainder.is_one(); }
  IntPoly reconstruct() const;
  unsigned multiplicity(unsigned index) const;
  std::string str() const;  // e.g. "phi_2^2 phi_14"
};

// Splits off every cyclotomic factor of f with multiplicity.
CycloFactorization factor_cyclotomic(const IntPoly& f);

// Product prod phi_index^mult for explicitly given exponents.
IntPoly cyclotomic_product(const std::vector<std::pair<unsigned, unsigned>>& factors);

}  // namespace coxalg
