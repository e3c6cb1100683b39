#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "coxalg/intpoly.hpp"

namespace coxalg {

// Rational function num/den over the integers, kept in lowest terms: the
// polynomial gcd of num and den is constant, the pair carries no common
// integer content, and den has positive leading coefficient.
class RatFunc {
 public:
  RatFunc();  // zero, 0/1
  RatFunc(IntPoly num, IntPoly den);
  explicit RatFunc(IntPoly num);

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  bool operator==(const RatFunc& o) const = default;

  Rat eval(const Rat& x) const;  // den(x) must be nonzero

  // Taylor coefficients a_0..a_n of num/den at T = 0; den(0) must be nonzero.
  std::vector<Rat> series(std::size_t n) const;

  // Multiplicity of T = 1 as a root of the reduced denominator.
  unsigned pole_order_at_one() const;

  std::string str() const;

 private:
  IntPoly num_, den_;
  void reduce();
};

}  // namespace coxalg
