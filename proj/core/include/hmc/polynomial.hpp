#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hmc/rational.hpp"

namespace hmc {

/// Univariate polynomial in y over the rationals. Coefficients are stored in
/// ascending order of degree with no trailing zeros; the zero polynomial has
/// no coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<Rational> coeffs);

  /// The polynomial y.
  static Poly y();
  /// c * y^k.
  static Poly monomial(const Rational& c, int k);

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const;
  Rational leading() const;

  Rational eval(const Rational& at) const;
  Poly monic() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Poly pow(int exponent) const;

  /// Euclidean division: returns (quotient, remainder). Throws on zero divisor.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  /// Monic greatest common divisor (zero iff both inputs are zero).
  static Poly gcd(Poly a, Poly b);

  /// Human-readable ascending form, e.g. "2 - 20y + 2y^2".
  std::string str() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace hmc
