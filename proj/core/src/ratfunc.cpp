#include "coxalg/ratfunc.hpp"

#include <stdexcept>

namespace coxalg {

RatFunc::RatFunc() : num_{}, den_{IntPoly::constant(1)} {}

RatFunc::RatFunc(IntPoly num) : num_(std::move(num)), den_(IntPoly::constant(1)) {}

RatFunc::RatFunc(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("rational function with zero denominator");
  reduce();
}

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = IntPoly::constant(1);
    return;
  }
  IntPoly g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = exact_divide(num_, g);
    den_ = exact_divide(den_, g);
  }
  Int c = boost::multiprecision::gcd(num_.content(), den_.content());
  if (c > 1) {
    std::vector<Int> n = num_.coeffs(), d = den_.coeffs();
    for (auto& x : n) x /= c;
    for (auto& x : d) x /= c;
    num_ = IntPoly(std::move(n));
    den_ = IntPoly(std::move(d));
  }
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw std::invalid_argument("division by the zero function");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

Rat RatFunc::eval(const Rat& x) const {
  Rat d = den_.eval(x);
  if (d == 0) throw std::domain_error("evaluation at a pole");
  return num_.eval(x) / d;
}

std::vector<Rat> RatFunc::series(std::size_t n) const {
  Int d0 = den_.coeff(0);
  if (d0 == 0) throw std::domain_error("series expansion at a pole");
  std::vector<Rat> out(n + 1, Rat(0));
  for (std::size_t k = 0; k <= n; ++k) {
    Rat acc(num_.coeff(k));
    for (std::size_t j = 1; j <= k; ++j) acc -= Rat(den_.coeff(j)) * out[k - j];
    out[k] = acc / Rat(d0);
  }
  return out;
}

unsigned RatFunc::pole_order_at_one() const {
  unsigned ord = 0;
  IntPoly d = den_;
  IntPoly lin{-1, 1};  // T - 1
  while (!d.is_zero() && d.eval(Int(1)) == 0) {
    d = divrem_monic(d, lin).first;
    ++ord;
  }
  return ord;
}

std::string RatFunc::str() const {
  if (is_polynomial() && den_.is_one()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace coxalg
