#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "coxalg/types.hpp"

namespace coxalg {

// Dense univariate integer polynomial. Index i holds the coefficient of T^i.
// The zero polynomial stores nothing; otherwise the last entry is nonzero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);
  IntPoly(std::initializer_list<Int> coeffs);

  static IntPoly constant(Int a);
  static IntPoly monomial(Int a, std::size_t k);
  static IntPoly variable();  // T

  // degree() is -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  const Int& leading() const;
  Int coeff(std::size_t k) const;
  const std::vector<Int>& coeffs() const { return c_; }

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  bool operator==(const IntPoly& o) const = default;

  Int eval(const Int& x) const;
  Rat eval(const Rat& x) const;
  int sign_at(const Rat& x) const;

  IntPoly derivative() const;
  // T^deg * f(1/T); the coefficient sequence reversed.
  IntPoly reversed() const;
  bool palindromic() const { return *this == reversed(); }
  IntPoly pow(unsigned e) const;

  Int content() const;       // gcd of coefficients, nonnegative; 0 for zero
  IntPoly primitive() const; // divided by content, leading sign kept

  std::string str(const std::string& var = "T") const;

 private:
  std::vector<Int> c_;
  void trim();
};

IntPoly operator+(IntPoly a, const IntPoly& b);
IntPoly operator-(IntPoly a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const Int& s, const IntPoly& a);

// Quotient and remainder for a monic divisor, entirely over the integers.
std::pair<IntPoly, IntPoly> divrem_monic(const IntPoly& a, const IntPoly& b);

// Exact division: a = q * b with integer q. Returns false when b does not
// divide a over the integers.
bool try_exact_divide(const IntPoly& a, const IntPoly& b, IntPoly& q);
IntPoly exact_divide(const IntPoly& a, const IntPoly& b);

// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntPoly poly_gcd(IntPoly a, IntPoly b);

// f / gcd(f, f'), made primitive with positive leading coefficient.
IntPoly squarefree_part(const IntPoly& f);

// Yun decomposition: returns g_1, ..., g_k (each primitive, pairwise coprime,
// squarefree, possibly constant 1) with f = c * prod g_i^i for a rational c.
std::vector<IntPoly> squarefree_decomposition(const IntPoly& f);

// Dense univariate polynomial over the rationals. Same canonical form as
// IntPoly; boost keeps each entry in lowest terms with positive denominator.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs);
  explicit RatPoly(const IntPoly& p);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rat& leading() const;
  Rat coeff(std::size_t k) const;
  const std::vector<Rat>& coeffs() const { return c_; }

  RatPoly& operator-=(const RatPoly& o);
  RatPoly operator*(const RatPoly& o) const;
  bool operator==(const RatPoly& o) const = default;

  Rat eval(const Rat& x) const;

  // Positive rational multiple with coprime integer coefficients.
  IntPoly primitive_integer() const;

 private:
  std::vector<Rat> c_;
  void trim();
};

std::pair<RatPoly, RatPoly> divrem(const RatPoly& a, const RatPoly& b);

}  // namespace coxalg
