#pragma once

#include <string>

#include "hmc/polynomial.hpp"

namespace hmc {

/// Element of Q(y): numerator/denominator with a monic denominator and no
/// common factor. Zero is stored as 0/1.
class RatFuncY {
 public:
  RatFuncY() : num_(), den_(Rational(1)) {}
  RatFuncY(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
  RatFuncY(long c) : RatFuncY(Rational(c)) {}                  // NOLINT
  RatFuncY(const Poly& p) : num_(p), den_(Rational(1)) {}      // NOLINT
  RatFuncY(const Poly& num, const Poly& den);

  static RatFuncY y() { return RatFuncY(Poly::y()); }
  /// 1 + y, the ubiquitous scaling factor.
  static RatFuncY one_plus_y();

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  /// The polynomial value; throws ArithmeticError if the denominator is not 1.
  Poly as_poly() const;
  /// Exact evaluation; throws ArithmeticError("non-polynomial class") at a pole.
  Rational eval(const Rational& at) const;

  RatFuncY operator-() const;
  RatFuncY& operator+=(const RatFuncY& o);
  RatFuncY& operator-=(const RatFuncY& o);
  RatFuncY& operator*=(const RatFuncY& o);
  RatFuncY& operator/=(const RatFuncY& o);
  friend RatFuncY operator+(RatFuncY a, const RatFuncY& b) { return a += b; }
  friend RatFuncY operator-(RatFuncY a, const RatFuncY& b) { return a -= b; }
  friend RatFuncY operator*(RatFuncY a, const RatFuncY& b) { return a *= b; }
  friend RatFuncY operator/(RatFuncY a, const RatFuncY& b) { return a /= b; }
  friend bool operator==(const RatFuncY& a, const RatFuncY& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RatFuncY pow(int exponent) const;

  /// Re-applies normalization; a no-op on any stored value.
  RatFuncY normalized() const { return RatFuncY(num_, den_); }

  std::string str() const;

 private:
  Poly num_;
  Poly den_;
};

enum class ArithKind { kAdd, kMul, kDiv };

RatFuncY ratfunc_arith(const RatFuncY& a, const RatFuncY& b, ArithKind kind);

}  // namespace hmc
