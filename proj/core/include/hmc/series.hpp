#pragma once

#include <vector>

#include "hmc/ratfunc.hpp"

namespace hmc {

/// Truncated power series sum_{k <= order} c_k alpha^k with coefficients in Q(y).
class SeriesA {
 public:
  explicit SeriesA(int order);
  SeriesA(std::vector<RatFuncY> coeffs, int order);

  /// The series alpha (zero when order == 0).
  static SeriesA alpha(int order);
  static SeriesA constant(const RatFuncY& c, int order);
  /// exp(c * alpha) truncated; c a rational scalar.
  static SeriesA exp_linear(const RatFuncY& c, int order);

  int order() const { return order_; }
  const RatFuncY& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  RatFuncY& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
  const std::vector<RatFuncY>& coeffs() const { return c_; }

  SeriesA operator-() const;
  SeriesA& operator+=(const SeriesA& o);
  SeriesA& operator-=(const SeriesA& o);
  SeriesA& operator*=(const SeriesA& o);
  SeriesA& operator*=(const RatFuncY& s);
  friend SeriesA operator+(SeriesA a, const SeriesA& b) { return a += b; }
  friend SeriesA operator-(SeriesA a, const SeriesA& b) { return a -= b; }
  friend SeriesA operator*(SeriesA a, const SeriesA& b) { return a *= b; }
  friend SeriesA operator*(SeriesA a, const RatFuncY& s) { return a *= s; }
  friend bool operator==(const SeriesA& a, const SeriesA& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
  }

  /// Multiplicative inverse; requires an invertible constant term.
  SeriesA inverse() const;
  /// Substitution alpha -> factor * alpha.
  SeriesA compose_scale(const RatFuncY& factor) const;
  /// Natural logarithm; requires constant term 1.
  SeriesA log() const;
  /// Exponential; requires constant term 0.
  SeriesA exp() const;
  SeriesA truncated(int order) const;

 private:
  void require_same_order(const SeriesA& o) const;
  int order_;
  std::vector<RatFuncY> c_;
};

enum class SeriesOp { kAdd, kMul, kInvert, kComposeScale };

/// Dispatching entry point; `b` is ignored for kInvert, and for kComposeScale
/// its constant term is used as the scale factor.
SeriesA series_arith(const SeriesA& a, const SeriesA& b, SeriesOp op);

}  // namespace hmc
