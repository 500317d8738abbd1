#include "hmc/ambient.hpp"

#include "hmc/error.hpp"

namespace hmc {

GradedClass GradedClass::cap(const RingElem& x) {
  GradedClass g;
  g.ring = x.ring();
  const int d = g.ring->dim();
  g.by_degree.resize(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) {
    const int j = d - k;
    for (int i = g.ring->offset(j); i < g.ring->offset(j) + g.ring->rank(j); ++i)
      g.by_degree[static_cast<std::size_t>(k)].push_back(x[i]);
  }
  return g;
}

RingElem GradedClass::as_cohomology() const {
  RingElem x(ring);
  const int d = ring->dim();
  for (int k = 0; k <= d; ++k) {
    const int j = d - k;
    for (int i = 0; i < ring->rank(j); ++i)
      x[ring->offset(j) + i] = by_degree[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
  }
  return x;
}

bool GradedClass::is_polynomial() const {
  for (const auto& v : by_degree)
    for (const auto& c : v)
      if (!c.is_polynomial()) return false;
  return true;
}

bool GradedClass::is_zero() const {
  for (const auto& v : by_degree)
    for (const auto& c : v)
      if (!c.is_zero()) return false;
  return true;
}

GradedClass specialize(const GradedClass& c, const Rational& y0) {
  GradedClass out = c;
  for (auto& v : out.by_degree)
    for (auto& x : v) x = RatFuncY(x.eval(y0));
  return out;
}

GradedClass push_linear(const GradedClass& c, int n) {
  if (c.ring->blown_points() != 0 || c.dim() > n) throw ArithmeticError("push_linear expects a class on P^k with k <= n");
  GradedClass out;
  out.ring = IntersectionRing::projective(n);
  out.by_degree.assign(static_cast<std::size_t>(n) + 1, std::vector<RatFuncY>(1));
  for (int k = 0; k <= c.dim(); ++k) out.by_degree[static_cast<std::size_t>(k)][0] = c.at(k);
  return out;
}

ChernData tangent_pn(const RingPtr& pn) {
  const RingElem h = RingElem::basis(pn, pn->hyperplane_index());
  return ChernData::from_roots(pn, std::vector<RingElem>(static_cast<std::size_t>(pn->dim()) + 1, h));
}

GradedClass ty_class_pn(int n) {
  if (n < 0) throw ArithmeticError("negative dimension");
  const RingPtr pn = IntersectionRing::projective(n);
  if (n == 0) return GradedClass::cap(RingElem::one(pn));
  const RingElem h = RingElem::basis(pn, pn->hyperplane_index());
  return GradedClass::cap(class_from_roots(pn, std::vector<RingElem>(static_cast<std::size_t>(n) + 1, h), HirzebruchKind::kQ));
}

GradedClass virtual_pushed_ci(const std::vector<int>& degrees, int n) {
  if (n < 1) throw ArithmeticError("ambient dimension must be at least 1");
  const RingPtr pn = IntersectionRing::projective(n);
  const RingElem h = RingElem::basis(pn, pn->hyperplane_index());
  RingElem x = class_from_roots(pn, std::vector<RingElem>(static_cast<std::size_t>(n) + 1, h), HirzebruchKind::kQ);
  const SeriesA r = hirzebruch_series(HirzebruchKind::kR, n);
  for (int d : degrees) {
    if (d < 1) throw ArithmeticError("hypersurface degree must be positive");
    x *= (h * RatFuncY(Rational(d))).apply(r);
  }
  return GradedClass::cap(x);
}

GradedClass virtual_pushed(int d, int n) { return virtual_pushed_ci({d}, n); }

Poly virtual_genus(int d, int n) { return virtual_pushed(d, n).degree0().as_poly(); }

}  // namespace hmc
