#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hmc/ambient.hpp"
#include "hmc/arrangement.hpp"
#include "hmc/genera.hpp"

namespace hmc {

enum class ModelKind { kPoint, kCurve, kSurface };
enum class BoundarySource { kEdge, kExceptional, kInfinity };

/// Normalization window for the residues of the extended connection.
enum class ResidueWindow { kLeftOpen /* (0,1] */, kRightOpen /* [0,1) */ };

struct BoundaryDivisor {
  std::string id;
  BoundarySource source = BoundarySource::kEdge;
  int edge = -1;     // the sub-edge S' (kEdge, kExceptional)
  long m_rel = 0;    // m_{S',S}; unused for the divisor at infinity
  long residue = 0;  // m' in [0, m_S)
  RingElem cls;      // divisor class on the model
};

/// Good compactification of a stratum closure: a point, P^1, or P^2 blown up
/// at the points where the induced arrangement is not normal crossing. The
/// generic hyperplane X' contributes one boundary divisor at infinity.
struct StratumModel {
  Stratum stratum;
  ModelKind kind = ModelKind::kPoint;
  RingPtr ring;
  int n = 0;   // ambient dimension
  long m = 0;  // total degree of the arrangement
  std::vector<int> blown;  // edge id of each blown-up point, in eps order
  std::vector<BoundaryDivisor> boundary;

  int dim() const { return stratum.dim; }
  long m_S() const { return stratum.m_S; }
  /// Pull-back of the hyperplane class of the closure (zero on a point).
  RingElem hyperplane() const;
  RingElem point_class() const { return RingElem::basis(ring, ring->size() - 1); }
  ChernData tangent() const;
};

/// Throws ValidationError("unsupported stratum dimension") for dim >= 3.
StratumModel compactify(const Arrangement& a, const Stratum& s);

/// Residue integers m' of the boundary divisors, in boundary order:
/// m'_{S'} = m_{S',S} mod m_S and m'_inf = (-m) mod m_S.
std::vector<long> residues(const StratumModel& model);

/// c_1 of L = pi^* O(-ceil((m - m_S)/m_S)) (sum floor(m_{S',S}/m_S) E_{S'}).
RingElem deligne_base_class(const StratumModel& model);

/// c_1 of the Deligne extension of the rank-one local system with monodromy
/// e(k/m_S), k in [1, m_S].
RingElem deligne_class(const StratumModel& model, long k, ResidueWindow window = ResidueWindow::kLeftOpen);

/// Residues of the extended connection along each boundary divisor.
std::vector<Rational> deligne_residues(const StratumModel& model, long k, ResidueWindow window);

/// m_S c_1(L) = -sum m' [D] over all boundary divisors, infinity included.
bool power_identity_holds(const StratumModel& model);

/// Chern data of Omega^q(log D) on the model.
ChernData log_chern(const StratumModel& model, int q);

/// Named basis of the rational Chow group of Sigma.
struct SigmaLabel {
  std::string name;
  int degree = 0;   // Chow degree k
  int codim = 0;    // codimension in P^n
  bool shared = false;
  int edge = -1;    // own labels only
};

class SigmaChowBasis {
 public:
  static std::shared_ptr<const SigmaChowBasis> of(const Arrangement& a);

  const std::vector<SigmaLabel>& labels() const { return labels_; }
  int size() const { return static_cast<int>(labels_.size()); }
  int find(const std::string& name) const;
  /// Label receiving the fundamental class of an edge closure.
  int fundamental_label(int edge) const;
  /// Shared label of degree k, or -1.
  int shared_label(int k) const;
  int n() const { return n_; }

 private:
  int n_ = 0;
  std::vector<SigmaLabel> labels_;
  std::vector<int> fundamental_;  // by edge id, -1 if not in Sigma
};

using SigmaBasisPtr = std::shared_ptr<const SigmaChowBasis>;

struct SigmaChowVector {
  SigmaBasisPtr basis;
  std::vector<RatFuncY> coeffs;

  explicit SigmaChowVector(SigmaBasisPtr b = nullptr);
  SigmaChowVector& operator+=(const SigmaChowVector& o);
  SigmaChowVector& operator*=(const RatFuncY& s);
  friend SigmaChowVector operator+(SigmaChowVector a, const SigmaChowVector& b) { return a += b; }
  friend SigmaChowVector operator*(SigmaChowVector a, const RatFuncY& s) { return a *= s; }
  /// Equal label sets and coefficients.
  friend bool operator==(const SigmaChowVector& a, const SigmaChowVector& b);

  const RatFuncY& at(const std::string& name) const;
  /// Sum of the degree-0 coefficients.
  RatFuncY trace() const;
  SigmaChowVector specialize(const Rational& y0) const;
  bool is_polynomial() const;
  bool is_zero() const;
};

/// Push-forward of a class on the model to Sigma: pi_* to the closure (the
/// [P^k] coefficient is the integral against e^k), then onto the labels.
SigmaChowVector push_to_sigma(const StratumModel& model, const GradedClass& c, const SigmaBasisPtr& basis);

struct ChowDims {
  std::vector<int> ch_x;      // k = 0..n
  std::vector<int> ch_sigma;  // k = 0..n
};

ChowDims chow_dims(const Arrangement& a);
/// Rank of Gr^W_{-k} H_k(X, Q) for k = 0..2n.
std::vector<int> homology_weight_dims(const Arrangement& a);

}  // namespace hmc
