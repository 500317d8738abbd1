#pragma once

#include <vector>

#include "hmc/genera.hpp"
#include "hmc/ring.hpp"

namespace hmc {

/// Homology class on a ring model, graded by homology degree k. The entries
/// of by_degree[k] are coefficients over the cohomology basis of degree
/// dim - k (Poincare duality is a relabeling).
struct GradedClass {
  RingPtr ring;
  std::vector<std::vector<RatFuncY>> by_degree;

  /// x cap [fundamental class].
  static GradedClass cap(const RingElem& x);
  RingElem as_cohomology() const;

  int dim() const { return ring->dim(); }
  /// Coefficient of [P^k] on a projective-space ring.
  const RatFuncY& at(int k) const { return by_degree[static_cast<std::size_t>(k)].front(); }
  /// Coefficient of the point class.
  const RatFuncY& degree0() const { return by_degree.front().front(); }
  bool is_polynomial() const;
  bool is_zero() const;
  friend bool operator==(const GradedClass& a, const GradedClass& b) {
    return same_ring(a.ring, b.ring) && a.by_degree == b.by_degree;
  }
};

/// Entrywise evaluation at y = y0; throws ArithmeticError("non-polynomial class") at a pole.
GradedClass specialize(const GradedClass& c, const Rational& y0);

/// Push-forward along a linear embedding P^k -> P^n.
GradedClass push_linear(const GradedClass& c, int n);

/// Tangent bundle of P^n: n+1 Chern roots h (Euler sequence, trivial part dropped).
ChernData tangent_pn(const RingPtr& pn);

/// T_{y*}(P^n) = prod Q_y(h)^{n+1} cap [P^n].
GradedClass ty_class_pn(int n);

/// Pushed virtual Hirzebruch class of a complete intersection of the given
/// degrees in P^n: prod_j R_y(d_j h) * T_y^*(TP^n) cap [P^n].
GradedClass virtual_pushed_ci(const std::vector<int>& degrees, int n);
GradedClass virtual_pushed(int d, int n);

/// Degree-zero coefficient of virtual_pushed(d, n).
Poly virtual_genus(int d, int n);

}  // namespace hmc
