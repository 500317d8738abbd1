#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hmc/ratfunc.hpp"
#include "hmc/series.hpp"

namespace hmc {

/// Graded commutative Q-algebra with a finite basis and a one-dimensional top
/// degree, given by structure constants. Two families are provided: the
/// cohomology of P^n, and the Chow ring of P^2 blown up at finitely many points.
class IntersectionRing {
 public:
  /// Q[h]/(h^{n+1}); basis h^k in degree k.
  static std::shared_ptr<const IntersectionRing> projective(int n);
  /// P^2 blown up at `points` points: basis 1; e, eps_1..eps_b; pt with
  /// e^2 = pt, eps_p eps_q = -delta_pq pt, e eps_p = 0.
  static std::shared_ptr<const IntersectionRing> blown_up_plane(int points);

  int dim() const { return dim_; }
  int size() const { return static_cast<int>(names_.size()); }
  /// Global index of the first basis element of degree k, and the count.
  int offset(int k) const { return offsets_[static_cast<std::size_t>(k)]; }
  int rank(int k) const { return offsets_[static_cast<std::size_t>(k) + 1] - offsets_[static_cast<std::size_t>(k)]; }
  int degree_of(int index) const { return degrees_[static_cast<std::size_t>(index)]; }
  const std::string& name(int index) const { return names_[static_cast<std::size_t>(index)]; }
  const std::string& id() const { return id_; }

  /// Structure constants: product of basis elements i and j as (index, coeff).
  const std::vector<std::pair<int, Rational>>& product(int i, int j) const {
    return table_[static_cast<std::size_t>(i * size() + j)];
  }

  /// Index of the pulled-back hyperplane class (h, or e on a blow-up).
  int hyperplane_index() const { return dim_ >= 1 ? offset(1) : -1; }
  /// Number of blown-up points (0 for projective spaces).
  int blown_points() const { return blown_; }

 private:
  IntersectionRing() = default;
  int dim_ = 0;
  int blown_ = 0;
  std::string id_;
  std::vector<int> offsets_;
  std::vector<int> degrees_;
  std::vector<std::string> names_;
  std::vector<std::vector<std::pair<int, Rational>>> table_;
};

using RingPtr = std::shared_ptr<const IntersectionRing>;

/// Rings built by the same factory call shape have identical structure.
inline bool same_ring(const RingPtr& a, const RingPtr& b) { return a == b || (a && b && a->id() == b->id()); }

/// Element of an IntersectionRing with coefficients in Q(y).
class RingElem {
 public:
  RingElem() = default;
  explicit RingElem(RingPtr ring);
  static RingElem one(RingPtr ring);
  static RingElem basis(RingPtr ring, int index, const RatFuncY& coeff = RatFuncY(1));
  static RingElem scalar(RingPtr ring, const RatFuncY& c);

  const RingPtr& ring() const { return ring_; }
  const RatFuncY& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  RatFuncY& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  const std::vector<RatFuncY>& coeffs() const { return c_; }

  bool is_zero() const;
  /// Homogeneous component of degree k.
  RingElem part(int k) const;
  /// True iff all nonzero coefficients sit in degree k.
  bool is_pure(int k) const;
  /// Coefficient of the top-degree basis element.
  const RatFuncY& top() const { return c_.back(); }
  /// Constant term.
  const RatFuncY& constant() const { return c_.front(); }

  RingElem operator-() const;
  RingElem& operator+=(const RingElem& o);
  RingElem& operator-=(const RingElem& o);
  RingElem& operator*=(const RingElem& o);
  RingElem& operator*=(const RatFuncY& s);
  friend RingElem operator+(RingElem a, const RingElem& b) { return a += b; }
  friend RingElem operator-(RingElem a, const RingElem& b) { return a -= b; }
  friend RingElem operator*(const RingElem& a, const RingElem& b);
  friend RingElem operator*(RingElem a, const RatFuncY& s) { return a *= s; }
  friend bool operator==(const RingElem& a, const RingElem& b);

  RingElem pow(int k) const;
  /// Inverse of an element with invertible constant term.
  RingElem inverse() const;
  /// exp(u) for u without constant term.
  RingElem exp() const;
  /// log(u) for u with constant term 1.
  RingElem log() const;
  /// f(u) = sum f_k u^k for u without constant term.
  RingElem apply(const SeriesA& f) const;
  /// Entrywise evaluation at y = y0.
  RingElem specialize(const Rational& y0) const;

  std::string str() const;

 private:
  void require_same_ring(const RingElem& o) const;
  RingPtr ring_;
  std::vector<RatFuncY> c_;
};

}  // namespace hmc
