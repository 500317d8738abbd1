#include "hmc/ratfunc.hpp"

#include "hmc/error.hpp"

namespace hmc {

RatFuncY::RatFuncY(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw ArithmeticError("division by zero");
  if (num.is_zero()) {
    num_ = Poly();
    den_ = Poly(Rational(1));
    return;
  }
  Poly g = Poly::gcd(num, den);
  Poly n = Poly::divmod(num, g).first;
  Poly d = Poly::divmod(den, g).first;
  const Rational lead = d.leading();
  num_ = n * Poly(Rational(1) / lead);
  den_ = d * Poly(Rational(1) / lead);
}

RatFuncY RatFuncY::one_plus_y() { return RatFuncY(Poly::y() + Poly(1)); }

Poly RatFuncY::as_poly() const {
  if (!is_polynomial()) throw ArithmeticError("non-polynomial class: " + str());
  return num_;
}

Rational RatFuncY::eval(const Rational& at) const {
  const Rational d = den_.eval(at);
  if (d.is_zero()) throw ArithmeticError("non-polynomial class: pole of " + str() + " at y = " + at.str());
  return num_.eval(at) / d;
}

RatFuncY RatFuncY::operator-() const {
  RatFuncY r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFuncY& RatFuncY::operator+=(const RatFuncY& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    *this = RatFuncY(num_ + o.num_, den_);
  } else {
    *this = RatFuncY(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  return *this;
}

RatFuncY& RatFuncY::operator-=(const RatFuncY& o) { return *this += -o; }

RatFuncY& RatFuncY::operator*=(const RatFuncY& o) {
  if (is_zero() || o.is_zero()) return *this = RatFuncY();
  if (is_polynomial() && o.is_polynomial()) {
    num_ *= o.num_;
    return *this;
  }
  *this = RatFuncY(num_ * o.num_, den_ * o.den_);
  return *this;
}

RatFuncY& RatFuncY::operator/=(const RatFuncY& o) {
  if (o.is_zero()) throw ArithmeticError("division by zero");
  *this = RatFuncY(num_ * o.den_, den_ * o.num_);
  return *this;
}

RatFuncY RatFuncY::pow(int exponent) const {
  if (exponent < 0) return RatFuncY(1) / pow(-exponent);
  return RatFuncY(num_.pow(exponent), den_.pow(exponent));
}

std::string RatFuncY::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFuncY ratfunc_arith(const RatFuncY& a, const RatFuncY& b, ArithKind kind) {
  switch (kind) {
    case ArithKind::kAdd:
      return a + b;
    case ArithKind::kMul:
      return a * b;
    case ArithKind::kDiv:
      return a / b;
  }
  throw ArithmeticError("unknown arithmetic kind");
}

}  // namespace hmc
