#include "hmc/series.hpp"

#include "hmc/error.hpp"

namespace hmc {

SeriesA::SeriesA(int order) : order_(order), c_(static_cast<std::size_t>(order) + 1) {
  if (order < 0) throw ArithmeticError("negative truncation order");
}

SeriesA::SeriesA(std::vector<RatFuncY> coeffs, int order) : SeriesA(order) {
  for (std::size_t k = 0; k < coeffs.size() && k < c_.size(); ++k) c_[k] = std::move(coeffs[k]);
}

SeriesA SeriesA::alpha(int order) {
  SeriesA s(order);
  if (order >= 1) s[1] = RatFuncY(1);
  return s;
}

SeriesA SeriesA::constant(const RatFuncY& c, int order) {
  SeriesA s(order);
  s[0] = c;
  return s;
}

SeriesA SeriesA::exp_linear(const RatFuncY& c, int order) {
  SeriesA s(order);
  RatFuncY term(1);
  for (int k = 0; k <= order; ++k) {
    s[k] = term;
    term = term * c / RatFuncY(k + 1);
  }
  return s;
}

void SeriesA::require_same_order(const SeriesA& o) const {
  if (o.order_ != order_) throw ArithmeticError("series truncation orders differ");
}

SeriesA SeriesA::operator-() const {
  SeriesA r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

SeriesA& SeriesA::operator+=(const SeriesA& o) {
  require_same_order(o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

SeriesA& SeriesA::operator-=(const SeriesA& o) {
  require_same_order(o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

SeriesA& SeriesA::operator*=(const SeriesA& o) {
  require_same_order(o);
  std::vector<RatFuncY> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < c_.size(); ++j) {
      if (o.c_[j].is_zero()) continue;
      r[i + j] += c_[i] * o.c_[j];
    }
  }
  c_ = std::move(r);
  return *this;
}

SeriesA& SeriesA::operator*=(const RatFuncY& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

SeriesA SeriesA::inverse() const {
  if (c_[0].is_zero()) throw ArithmeticError("series with non-invertible constant term");
  SeriesA r(order_);
  const RatFuncY inv0 = RatFuncY(1) / c_[0];
  r[0] = inv0;
  for (int k = 1; k <= order_; ++k) {
    RatFuncY acc;
    for (int i = 1; i <= k; ++i) acc += (*this)[i] * r[k - i];
    r[k] = -acc * inv0;
  }
  return r;
}

SeriesA SeriesA::compose_scale(const RatFuncY& factor) const {
  SeriesA r = *this;
  RatFuncY p(1);
  for (int k = 0; k <= order_; ++k) {
    r[k] *= p;
    p *= factor;
  }
  return r;
}

SeriesA SeriesA::log() const {
  if (!(c_[0] == RatFuncY(1))) throw ArithmeticError("log of a series requires constant term 1");
  // log(1 + u) = sum_{k>=1} (-1)^{k+1} u^k / k
  SeriesA u = *this;
  u[0] = RatFuncY();
  SeriesA result(order_);
  SeriesA power = u;
  for (int k = 1; k <= order_; ++k) {
    const RatFuncY w = RatFuncY(Rational(k % 2 == 1 ? 1 : -1, k));
    result += power * w;
    power *= u;
  }
  return result;
}

SeriesA SeriesA::exp() const {
  if (!c_[0].is_zero()) throw ArithmeticError("exp of a series requires constant term 0");
  SeriesA result = SeriesA::constant(RatFuncY(1), order_);
  SeriesA term = result;
  for (int k = 1; k <= order_; ++k) {
    term *= *this;
    term *= RatFuncY(Rational(1, k));
    result += term;
  }
  return result;
}

SeriesA SeriesA::truncated(int order) const {
  SeriesA r(order);
  for (int k = 0; k <= order && k <= order_; ++k) r[k] = (*this)[k];
  return r;
}

SeriesA series_arith(const SeriesA& a, const SeriesA& b, SeriesOp op) {
  switch (op) {
    case SeriesOp::kAdd:
      return a + b;
    case SeriesOp::kMul:
      return a * b;
    case SeriesOp::kInvert:
      return a.inverse();
    case SeriesOp::kComposeScale:
      return a.compose_scale(b[0]);
  }
  throw ArithmeticError("unknown series operation");
}

}  // namespace hmc
