#pragma once

#include <vector>

#include "hmc/ring.hpp"
#include "hmc/series.hpp"

namespace hmc {

enum class HirzebruchKind { kQ, kQtilde, kR, kTodd };

/// Truncated expansion of one of the normalized Hirzebruch power series:
///   Q_y(a)      = a(1+y)/(1 - e^{-a(1+y)}) - a y
///   Qtilde_y(a) = a(1 + y e^{-a})/(1 - e^{-a})
///   R_y(a)      = (e^{a(1+y)} - 1)/(e^{a(1+y)} + y)
///   Todd(a)     = a/(1 - e^{-a})
SeriesA hirzebruch_series(HirzebruchKind kind, int order);

/// Coefficientwise evaluation of a series at y = y0.
SeriesA specialize_series(const SeriesA& s, const Rational& y0);

/// Q_y at y = 1, the L-class normalization a/tanh(a).
SeriesA l_class_series(int order);

struct SeriesIdentityReport {
  bool rescaling = false;  // Q_y(a) = (1+y)^{-1} Qtilde_y(a(1+y))
  bool product = false;    // Q_y(a) R_y(a) = a
  bool ok() const { return rescaling && product; }
};

SeriesIdentityReport verify_series_identities(int order);

/// prod_i f(root_i) for the series of the given kind; roots must be of pure degree 1.
RingElem class_from_roots(const RingPtr& ring, const std::vector<RingElem>& roots, HirzebruchKind kind);

/// Rank and Chern classes c_1..c_d of a (possibly virtual) bundle on a ring of
/// dimension d. Virtual differences carry a signed rank.
struct ChernData {
  RingPtr ring;
  long rank = 0;
  std::vector<RingElem> chern;  // chern[i-1] = c_i, pure of degree i

  static ChernData trivial(const RingPtr& ring, long rank);
  static ChernData line_bundle(const RingElem& c1);
  static ChernData from_roots(const RingPtr& ring, const std::vector<RingElem>& roots);
  /// From a total Chern class 1 + c_1 + ... + c_d.
  static ChernData from_total(long rank, const RingElem& total);

  RingElem total() const;
  ChernData dual() const;
  /// Direct sum; for a difference use `minus`.
  ChernData plus(const ChernData& o) const;
  ChernData minus(const ChernData& o) const;
};

/// Power sums p_k = sum alpha_i^k of the Chern roots, k = 1..dim.
std::vector<RingElem> power_sums(const ChernData& v);

/// prod_i phi(alpha_i) for a series phi with invertible constant term.
RingElem multiplicative_class(const ChernData& v, const SeriesA& phi);

RingElem chern_character(const ChernData& v);
RingElem todd_class(const ChernData& v);
/// T_y^* = prod Q_y(alpha_i).
RingElem hirzebruch_class(const ChernData& v);

/// ch(Lambda_y V) = prod (1 + y e^{alpha_i}); for virtual input the quotient.
RingElem lambda_y(const ChernData& v);
/// ch(Lambda^q V), the y^q coefficient of lambda_y for an honest bundle.
RingElem exterior_power_ch(const ChernData& v, int q);

}  // namespace hmc
