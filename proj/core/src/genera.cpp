#include "hmc/genera.hpp"

#include "hmc/error.hpp"

namespace hmc {

namespace {

SeriesA todd_series(int order) {
  // (1 - e^{-a})/a = sum (-1)^k a^k/(k+1)!
  SeriesA s(order);
  Rational fact(1);
  for (int k = 0; k <= order; ++k) {
    fact *= Rational(k + 1);
    s[k] = RatFuncY(Rational(k % 2 == 0 ? 1 : -1) / fact);
  }
  return s.inverse();
}

}  // namespace

SeriesA hirzebruch_series(HirzebruchKind kind, int order) {
  if (order < 0) throw ArithmeticError("negative truncation order");
  const RatFuncY y = RatFuncY::y();
  const RatFuncY one_y = RatFuncY::one_plus_y();
  switch (kind) {
    case HirzebruchKind::kTodd:
      return todd_series(order);
    case HirzebruchKind::kQ:
      return todd_series(order).compose_scale(one_y) - SeriesA::alpha(order) * y;
    case HirzebruchKind::kQtilde:
      return todd_series(order) *
             (SeriesA::constant(RatFuncY(1), order) + SeriesA::exp_linear(RatFuncY(-1), order) * y);
    case HirzebruchKind::kR: {
      const SeriesA e = SeriesA::exp_linear(one_y, order);
      return (e - SeriesA::constant(RatFuncY(1), order)) * (e + SeriesA::constant(y, order)).inverse();
    }
  }
  throw ArithmeticError("unknown series kind");
}

SeriesA specialize_series(const SeriesA& s, const Rational& y0) {
  SeriesA r(s.order());
  for (int k = 0; k <= s.order(); ++k) r[k] = RatFuncY(s[k].eval(y0));
  return r;
}

SeriesA l_class_series(int order) { return specialize_series(hirzebruch_series(HirzebruchKind::kQ, order), Rational(1)); }

SeriesIdentityReport verify_series_identities(int order) {
  SeriesIdentityReport rep;
  const SeriesA q = hirzebruch_series(HirzebruchKind::kQ, order);
  const SeriesA qt = hirzebruch_series(HirzebruchKind::kQtilde, order);
  const SeriesA r = hirzebruch_series(HirzebruchKind::kR, order);
  const RatFuncY one_y = RatFuncY::one_plus_y();
  rep.rescaling = (q == qt.compose_scale(one_y) * (RatFuncY(1) / one_y));
  rep.product = (q * r == SeriesA::alpha(order));
  return rep;
}

RingElem class_from_roots(const RingPtr& ring, const std::vector<RingElem>& roots, HirzebruchKind kind) {
  const SeriesA f = hirzebruch_series(kind, ring->dim());
  RingElem out = RingElem::one(ring);
  for (const auto& a : roots) {
    if (!a.is_pure(1)) throw ArithmeticError("Chern root must be of pure degree 1");
    out *= a.apply(f);
  }
  return out;
}

ChernData ChernData::trivial(const RingPtr& ring, long rank) {
  ChernData v;
  v.ring = ring;
  v.rank = rank;
  for (int i = 1; i <= ring->dim(); ++i) v.chern.emplace_back(ring);
  return v;
}

ChernData ChernData::line_bundle(const RingElem& c1) {
  if (!c1.is_pure(1)) throw ArithmeticError("first Chern class must be of pure degree 1");
  ChernData v = trivial(c1.ring(), 1);
  if (!v.chern.empty()) v.chern[0] = c1;
  return v;
}

ChernData ChernData::from_roots(const RingPtr& ring, const std::vector<RingElem>& roots) {
  RingElem t = RingElem::one(ring);
  for (const auto& a : roots) t *= RingElem::one(ring) + a;
  return from_total(static_cast<long>(roots.size()), t);
}

ChernData ChernData::from_total(long rank, const RingElem& total) {
  ChernData v;
  v.ring = total.ring();
  v.rank = rank;
  for (int i = 1; i <= v.ring->dim(); ++i) v.chern.push_back(total.part(i));
  return v;
}

RingElem ChernData::total() const {
  RingElem t = RingElem::one(ring);
  for (const auto& c : chern) t += c;
  return t;
}

ChernData ChernData::dual() const {
  ChernData v = *this;
  for (std::size_t i = 0; i < v.chern.size(); ++i)
    if (i % 2 == 0) v.chern[i] = -v.chern[i];
  return v;
}

ChernData ChernData::plus(const ChernData& o) const { return from_total(rank + o.rank, total() * o.total()); }

ChernData ChernData::minus(const ChernData& o) const {
  return from_total(rank - o.rank, total() * o.total().inverse());
}

std::vector<RingElem> power_sums(const ChernData& v) {
  const int d = v.ring->dim();
  std::vector<RingElem> p;
  auto c = [&](int i) { return i <= d ? v.chern[static_cast<std::size_t>(i - 1)] : RingElem(v.ring); };
  for (int k = 1; k <= d; ++k) {
    // Newton: p_k = sum_{i<k} (-1)^{i-1} c_i p_{k-i} + (-1)^{k-1} k c_k
    RingElem pk = c(k) * RatFuncY(Rational(k % 2 == 1 ? k : -k));
    for (int i = 1; i < k; ++i) {
      RingElem t = c(i) * p[static_cast<std::size_t>(k - i - 1)];
      if (i % 2 == 1)
        pk += t;
      else
        pk -= t;
    }
    p.push_back(pk);
  }
  return p;
}

RingElem multiplicative_class(const ChernData& v, const SeriesA& phi) {
  const int d = v.ring->dim();
  const RatFuncY phi0 = phi[0];
  if (phi0.is_zero()) throw ArithmeticError("multiplicative series needs an invertible constant term");
  const SeriesA l = (phi.truncated(std::min(phi.order(), d)) * (RatFuncY(1) / phi0)).log();
  const auto p = power_sums(v);
  RingElem s(v.ring);
  for (int k = 1; k <= std::min(d, l.order()); ++k) s += p[static_cast<std::size_t>(k - 1)] * l[k];
  return s.exp() * phi0.pow(static_cast<int>(v.rank));
}

RingElem chern_character(const ChernData& v) {
  RingElem ch = RingElem::scalar(v.ring, RatFuncY(Rational(v.rank)));
  Rational fact(1);
  const auto p = power_sums(v);
  for (std::size_t k = 0; k < p.size(); ++k) {
    fact *= Rational(static_cast<long>(k + 1));
    ch += p[k] * RatFuncY(Rational(1) / fact);
  }
  return ch;
}

RingElem todd_class(const ChernData& v) {
  return multiplicative_class(v, hirzebruch_series(HirzebruchKind::kTodd, v.ring->dim()));
}

RingElem hirzebruch_class(const ChernData& v) {
  return multiplicative_class(v, hirzebruch_series(HirzebruchKind::kQ, v.ring->dim()));
}

RingElem lambda_y(const ChernData& v) {
  // (1 + y e^a) = (1+y) * phi(a), phi(a) = (1 + y e^a)/(1+y)
  const int d = v.ring->dim();
  const RatFuncY y = RatFuncY::y();
  SeriesA phi = SeriesA::exp_linear(RatFuncY(1), d) * y;
  phi[0] = phi[0] + RatFuncY(1);
  return multiplicative_class(v, phi);
}

RingElem exterior_power_ch(const ChernData& v, int q) {
  if (v.rank < 0) throw ArithmeticError("exterior power of a virtual bundle");
  const RingElem l = lambda_y(v);
  RingElem out(v.ring);
  for (int i = 0; i < v.ring->size(); ++i) out[i] = RatFuncY(l[i].as_poly().coeff(q));
  return out;
}

}  // namespace hmc
