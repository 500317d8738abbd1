#include "hmc/ring.hpp"

#include <sstream>

#include "hmc/error.hpp"

namespace hmc {

std::shared_ptr<const IntersectionRing> IntersectionRing::projective(int n) {
  if (n < 0) throw ArithmeticError("negative ring dimension");
  auto r = std::shared_ptr<IntersectionRing>(new IntersectionRing());
  r->dim_ = n;
  r->id_ = "P" + std::to_string(n);
  for (int k = 0; k <= n; ++k) {
    r->offsets_.push_back(k);
    r->degrees_.push_back(k);
    r->names_.push_back(k == 0 ? "1" : (k == 1 ? "h" : "h^" + std::to_string(k)));
  }
  r->offsets_.push_back(n + 1);
  const int s = n + 1;
  r->table_.resize(static_cast<std::size_t>(s * s));
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j)
      if (i + j <= n) r->table_[static_cast<std::size_t>(i * s + j)] = {{i + j, Rational(1)}};
  return r;
}

std::shared_ptr<const IntersectionRing> IntersectionRing::blown_up_plane(int points) {
  if (points < 0) throw ArithmeticError("negative number of blown-up points");
  auto r = std::shared_ptr<IntersectionRing>(new IntersectionRing());
  r->dim_ = 2;
  r->blown_ = points;
  r->id_ = "Bl" + std::to_string(points) + "P2";
  r->names_.push_back("1");
  r->degrees_.push_back(0);
  r->names_.push_back("e");
  r->degrees_.push_back(1);
  for (int p = 1; p <= points; ++p) {
    r->names_.push_back("eps" + std::to_string(p));
    r->degrees_.push_back(1);
  }
  r->names_.push_back("pt");
  r->degrees_.push_back(2);
  r->offsets_ = {0, 1, 2 + points, 3 + points};
  const int s = r->size();
  const int pt = s - 1;
  r->table_.resize(static_cast<std::size_t>(s * s));
  auto set = [&](int i, int j, int k, const Rational& c) {
    r->table_[static_cast<std::size_t>(i * s + j)] = {{k, c}};
  };
  for (int i = 0; i < s; ++i) {
    set(0, i, i, Rational(1));
    set(i, 0, i, Rational(1));
  }
  set(1, 1, pt, Rational(1));
  for (int p = 2; p < pt; ++p) set(p, p, pt, Rational(-1));
  return r;
}

RingElem::RingElem(RingPtr ring) : ring_(std::move(ring)), c_(static_cast<std::size_t>(ring_->size())) {}

RingElem RingElem::one(RingPtr ring) { return basis(std::move(ring), 0); }

RingElem RingElem::basis(RingPtr ring, int index, const RatFuncY& coeff) {
  RingElem e(std::move(ring));
  e[index] = coeff;
  return e;
}

RingElem RingElem::scalar(RingPtr ring, const RatFuncY& c) { return basis(std::move(ring), 0, c); }

bool RingElem::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

RingElem RingElem::part(int k) const {
  RingElem e(ring_);
  if (k < 0 || k > ring_->dim()) return e;
  for (int i = ring_->offset(k); i < ring_->offset(k) + ring_->rank(k); ++i) e[i] = (*this)[i];
  return e;
}

bool RingElem::is_pure(int k) const {
  for (int i = 0; i < ring_->size(); ++i)
    if (ring_->degree_of(i) != k && !(*this)[i].is_zero()) return false;
  return true;
}

void RingElem::require_same_ring(const RingElem& o) const {
  if (!same_ring(ring_, o.ring_)) throw ArithmeticError("ring mismatch");
}

RingElem RingElem::operator-() const {
  RingElem e(*this);
  for (auto& c : e.c_) c = -c;
  return e;
}

RingElem& RingElem::operator+=(const RingElem& o) {
  require_same_ring(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

RingElem& RingElem::operator-=(const RingElem& o) {
  require_same_ring(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

RingElem operator*(const RingElem& a, const RingElem& b) {
  a.require_same_ring(b);
  RingElem out(a.ring_);
  const int s = a.ring_->size();
  for (int i = 0; i < s; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < s; ++j) {
      if (b[j].is_zero()) continue;
      const auto& prod = a.ring_->product(i, j);
      if (prod.empty()) continue;
      const RatFuncY ab = a[i] * b[j];
      for (const auto& [k, c] : prod) out[k] += ab * RatFuncY(c);
    }
  }
  return out;
}

RingElem& RingElem::operator*=(const RingElem& o) { return *this = *this * o; }

RingElem& RingElem::operator*=(const RatFuncY& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

bool operator==(const RingElem& a, const RingElem& b) { return same_ring(a.ring_, b.ring_) && a.c_ == b.c_; }

RingElem RingElem::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  RingElem out = one(ring_);
  for (int i = 0; i < k; ++i) out *= *this;
  return out;
}

RingElem RingElem::inverse() const {
  const RatFuncY c0 = constant();
  if (c0.is_zero()) throw ArithmeticError("non-invertible ring element");
  RingElem u = *this * (RatFuncY(1) / c0) - one(ring_);
  // 1/(1+u) = sum (-u)^k, u nilpotent
  RingElem out = one(ring_);
  RingElem term = one(ring_);
  for (int k = 1; k <= ring_->dim(); ++k) {
    term = term * (-u);
    out += term;
  }
  return out * (RatFuncY(1) / c0);
}

RingElem RingElem::exp() const {
  if (!constant().is_zero()) throw ArithmeticError("exp requires zero constant term");
  RingElem out = one(ring_);
  RingElem term = one(ring_);
  for (int k = 1; k <= ring_->dim(); ++k) {
    term = term * *this * RatFuncY(Rational(1, k));
    out += term;
  }
  return out;
}

RingElem RingElem::log() const {
  if (!(constant() == RatFuncY(1))) throw ArithmeticError("log requires constant term 1");
  const RingElem u = *this - one(ring_);
  RingElem out(ring_);
  RingElem term = one(ring_);
  for (int k = 1; k <= ring_->dim(); ++k) {
    term = term * u;
    out += term * RatFuncY(Rational(k % 2 == 1 ? 1 : -1, k));
  }
  return out;
}

RingElem RingElem::apply(const SeriesA& f) const {
  if (!constant().is_zero()) throw ArithmeticError("series argument must have zero constant term");
  RingElem out = scalar(ring_, f[0]);
  RingElem term = one(ring_);
  const int top = std::min(f.order(), ring_->dim());
  for (int k = 1; k <= top; ++k) {
    term = term * *this;
    out += term * f[k];
  }
  return out;
}

RingElem RingElem::specialize(const Rational& y0) const {
  RingElem e(ring_);
  for (std::size_t i = 0; i < c_.size(); ++i) e.c_[i] = RatFuncY(c_[i].eval(y0));
  return e;
}

std::string RingElem::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < ring_->size(); ++i) {
    if (c_[static_cast<std::size_t>(i)].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c_[static_cast<std::size_t>(i)].str() << ")" << ring_->name(i);
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace hmc
