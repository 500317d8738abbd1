#include "hmc/strata.hpp"

#include <algorithm>

#include "hmc/error.hpp"

namespace hmc {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long ceil_div(long a, long b) { return -floor_div(-a, b); }

long pos_mod(long a, long b) { return a - b * floor_div(a, b); }

std::string dim_prefix(int dim) {
  switch (dim) {
    case 0:
      return "P";
    case 1:
      return "L";
    case 2:
      return "H";
    default:
      return "X";
  }
}

}  // namespace

RingElem StratumModel::hyperplane() const {
  if (ring->dim() == 0) return RingElem(ring);
  return RingElem::basis(ring, ring->hyperplane_index());
}

ChernData StratumModel::tangent() const {
  switch (kind) {
    case ModelKind::kPoint:
      return ChernData::trivial(ring, 0);
    case ModelKind::kCurve:
      return ChernData::line_bundle(point_class() * RatFuncY(2));
    case ModelKind::kSurface: {
      RingElem c1 = hyperplane() * RatFuncY(3);
      for (int p = 0; p < ring->blown_points(); ++p) c1 -= RingElem::basis(ring, 2 + p);
      RingElem total = RingElem::one(ring) + c1 + point_class() * RatFuncY(Rational(3 + ring->blown_points()));
      return ChernData::from_total(2, total);
    }
  }
  throw ArithmeticError("unknown model kind");
}

StratumModel compactify(const Arrangement& a, const Stratum& s) {
  if (s.dim >= 3) throw ValidationError("unsupported stratum dimension " + std::to_string(s.dim));
  StratumModel model;
  model.stratum = s;
  model.n = a.n();
  model.m = a.degree();
  const auto& edges = a.edges();
  const Lattice& lat = a.lattice();
  auto key = [&](int edge) { return edge_key(edges[static_cast<std::size_t>(edge)].I, a.size()); };
  auto add = [&](std::string id, BoundarySource src, int edge, long m_rel, RingElem cls) {
    BoundaryDivisor d;
    d.id = std::move(id);
    d.source = src;
    d.edge = edge;
    d.m_rel = m_rel;
    d.cls = std::move(cls);
    model.boundary.push_back(std::move(d));
  };

  if (s.dim == 0) {
    model.kind = ModelKind::kPoint;
    model.ring = IntersectionRing::projective(0);
  } else if (s.dim == 1) {
    model.kind = ModelKind::kCurve;
    model.ring = IntersectionRing::projective(1);
    const RingElem pt = RingElem::basis(model.ring, 1);
    for (const auto& sub : s.boundary) add("E_{" + key(sub.edge) + "}", BoundarySource::kEdge, sub.edge, sub.m_rel, pt);
    add("X_inf", BoundarySource::kInfinity, -1, 0, pt);
  } else {
    model.kind = ModelKind::kSurface;
    std::vector<const SubEdge*> lines, points;
    for (const auto& sub : s.boundary) (sub.rel_codim == 1 ? lines : points).push_back(&sub);
    auto on = [&](const SubEdge* line, const SubEdge* pt) {
      return lat.leq(edges[static_cast<std::size_t>(line->edge)].flat, edges[static_cast<std::size_t>(pt->edge)].flat);
    };
    std::vector<const SubEdge*> blown;
    for (const SubEdge* p : points) {
      int through = 0;
      for (const SubEdge* l : lines) through += on(l, p) ? 1 : 0;
      if (through >= 3) blown.push_back(p);
    }
    model.ring = IntersectionRing::blown_up_plane(static_cast<int>(blown.size()));
    for (const SubEdge* p : blown) model.blown.push_back(p->edge);
    const RingElem e = RingElem::basis(model.ring, 1);
    for (const SubEdge* l : lines) {
      RingElem cls = e;
      for (std::size_t i = 0; i < blown.size(); ++i)
        if (on(l, blown[i])) cls -= RingElem::basis(model.ring, 2 + static_cast<int>(i));
      add("E_{" + key(l->edge) + "}", BoundarySource::kEdge, l->edge, l->m_rel, cls);
    }
    for (std::size_t i = 0; i < blown.size(); ++i)
      add("Exc_{" + key(blown[i]->edge) + "}", BoundarySource::kExceptional, blown[i]->edge, blown[i]->m_rel,
          RingElem::basis(model.ring, 2 + static_cast<int>(i)));
    add("X_inf", BoundarySource::kInfinity, -1, 0, e);
  }
  const auto res = residues(model);
  for (std::size_t i = 0; i < res.size(); ++i) model.boundary[i].residue = res[i];
  return model;
}

std::vector<long> residues(const StratumModel& model) {
  std::vector<long> out;
  for (const auto& d : model.boundary)
    out.push_back(d.source == BoundarySource::kInfinity ? pos_mod(-model.m, model.m_S()) : pos_mod(d.m_rel, model.m_S()));
  return out;
}

RingElem deligne_base_class(const StratumModel& model) {
  RingElem c = model.hyperplane() * RatFuncY(Rational(-ceil_div(model.m - model.m_S(), model.m_S())));
  for (const auto& d : model.boundary) {
    if (d.source == BoundarySource::kInfinity) continue;
    const long f = floor_div(d.m_rel, model.m_S());
    if (f != 0) c += d.cls * RatFuncY(Rational(f));
  }
  return c;
}

RingElem deligne_class(const StratumModel& model, long k, ResidueWindow window) {
  const long mS = model.m_S();
  if (k < 1 || k > mS) throw ValidationError("monodromy index k out of range [1, m_S]");
  RingElem c = deligne_base_class(model) * RatFuncY(Rational(k));
  for (const auto& d : model.boundary) {
    const long km = k * d.residue;
    const long coeff = window == ResidueWindow::kLeftOpen ? ceil_div(km, mS) - 1 : floor_div(km, mS);
    if (coeff != 0) c += d.cls * RatFuncY(Rational(coeff));
  }
  return c;
}

std::vector<Rational> deligne_residues(const StratumModel& model, long k, ResidueWindow window) {
  const long mS = model.m_S();
  std::vector<Rational> out;
  for (const auto& d : model.boundary) {
    const long km = k * d.residue;
    const long shift = window == ResidueWindow::kLeftOpen ? ceil_div(km, mS) - 1 : floor_div(km, mS);
    out.push_back(Rational(km, mS) - Rational(shift));
  }
  return out;
}

bool power_identity_holds(const StratumModel& model) {
  const RingElem lhs = deligne_base_class(model) * RatFuncY(Rational(model.m_S()));
  RingElem rhs(model.ring);
  for (const auto& d : model.boundary) rhs -= d.cls * RatFuncY(Rational(d.residue));
  return lhs == rhs;
}

ChernData log_chern(const StratumModel& model, int q) {
  if (q < 0 || q > model.dim()) throw ValidationError("form degree out of range");
  if (q == 0) return ChernData::trivial(model.ring, 1);
  RingElem divisor_sum(model.ring);
  for (const auto& d : model.boundary) divisor_sum += d.cls;
  const ChernData t = model.tangent();
  if (q == model.dim()) {
    // log canonical bundle K + D
    return ChernData::line_bundle(-t.chern.front() + divisor_sum);
  }
  // model is a surface and q = 1: c(Omega^1) prod (1 - D_i)^{-1}
  RingElem total = t.dual().total();
  for (const auto& d : model.boundary) total *= (RingElem::one(model.ring) - d.cls).inverse();
  return ChernData::from_total(2, total);
}

std::shared_ptr<const SigmaChowBasis> SigmaChowBasis::of(const Arrangement& a) {
  auto b = std::shared_ptr<SigmaChowBasis>(new SigmaChowBasis());
  const int n = a.n();
  b->n_ = n;
  const auto strata = sigma_strata(a);
  auto in_sigma1 = [&](const Edge& e) {
    return std::any_of(e.I.begin(), e.I.end(), [&](int j) { return a.hyperplanes()[static_cast<std::size_t>(j)].mult >= 2; });
  };
  bool sigma1 = false;
  for (const auto& h : a.hyperplanes()) sigma1 = sigma1 || h.mult >= 2;
  b->fundamental_.assign(a.edges().size(), -1);
  std::vector<std::pair<int, int>> own;  // (label position, edge)
  for (const auto& s : strata) {
    const Edge& e = a.edges()[static_cast<std::size_t>(s.edge)];
    const bool is_own = e.codim == 1 || (e.codim == 2 && !in_sigma1(e));
    if (!is_own) continue;
    SigmaLabel l;
    l.name = dim_prefix(n - e.codim) + "_{" + edge_key(e.I, a.size()) + "}";
    l.degree = n - e.codim;
    l.codim = e.codim;
    l.edge = e.id;
    b->labels_.push_back(l);
  }
  auto shared = [&](int k) {
    SigmaLabel l;
    l.name = "[P^" + std::to_string(k) + "]";
    l.degree = k;
    l.codim = n - k;
    l.shared = true;
    b->labels_.push_back(l);
  };
  if (sigma1 && n >= 2) shared(n - 2);
  if (!strata.empty())
    for (int k = n - 3; k >= 0; --k) shared(k);
  std::stable_sort(b->labels_.begin(), b->labels_.end(), [](const SigmaLabel& x, const SigmaLabel& y) {
    if (x.codim != y.codim) return x.codim < y.codim;
    return !x.shared && y.shared;
  });
  for (const auto& s : strata) {
    const Edge& e = a.edges()[static_cast<std::size_t>(s.edge)];
    int idx = -1;
    for (int i = 0; i < b->size(); ++i)
      if (b->labels_[static_cast<std::size_t>(i)].edge == e.id) idx = i;
    if (idx < 0) idx = b->shared_label(n - e.codim);
    b->fundamental_[static_cast<std::size_t>(e.id)] = idx;
  }
  return b;
}

int SigmaChowBasis::find(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[static_cast<std::size_t>(i)].name == name) return i;
  return -1;
}

int SigmaChowBasis::fundamental_label(int edge) const {
  if (edge < 0 || edge >= static_cast<int>(fundamental_.size())) return -1;
  return fundamental_[static_cast<std::size_t>(edge)];
}

int SigmaChowBasis::shared_label(int k) const {
  for (int i = 0; i < size(); ++i) {
    const auto& l = labels_[static_cast<std::size_t>(i)];
    if (l.shared && l.degree == k) return i;
  }
  return -1;
}

SigmaChowVector::SigmaChowVector(SigmaBasisPtr b) : basis(std::move(b)) {
  if (basis) coeffs.resize(static_cast<std::size_t>(basis->size()));
}

SigmaChowVector& SigmaChowVector::operator+=(const SigmaChowVector& o) {
  if (basis != o.basis && !(basis && o.basis && basis->labels().size() == o.basis->labels().size()))
    throw ArithmeticError("Sigma Chow basis mismatch");
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
  return *this;
}

SigmaChowVector& SigmaChowVector::operator*=(const RatFuncY& s) {
  for (auto& c : coeffs) c *= s;
  return *this;
}

bool operator==(const SigmaChowVector& a, const SigmaChowVector& b) {
  if (a.coeffs != b.coeffs) return false;
  if (a.basis == b.basis) return true;
  if (!a.basis || !b.basis || a.basis->size() != b.basis->size()) return false;
  for (int i = 0; i < a.basis->size(); ++i)
    if (a.basis->labels()[static_cast<std::size_t>(i)].name != b.basis->labels()[static_cast<std::size_t>(i)].name)
      return false;
  return true;
}

const RatFuncY& SigmaChowVector::at(const std::string& name) const {
  const int i = basis->find(name);
  if (i < 0) throw ValidationError("unknown Sigma label " + name);
  return coeffs[static_cast<std::size_t>(i)];
}

RatFuncY SigmaChowVector::trace() const {
  RatFuncY t;
  for (int i = 0; i < basis->size(); ++i)
    if (basis->labels()[static_cast<std::size_t>(i)].degree == 0) t += coeffs[static_cast<std::size_t>(i)];
  return t;
}

SigmaChowVector SigmaChowVector::specialize(const Rational& y0) const {
  SigmaChowVector v = *this;
  for (auto& c : v.coeffs) c = RatFuncY(c.eval(y0));
  return v;
}

bool SigmaChowVector::is_polynomial() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const RatFuncY& c) { return c.is_polynomial(); });
}

bool SigmaChowVector::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const RatFuncY& c) { return c.is_zero(); });
}

SigmaChowVector push_to_sigma(const StratumModel& model, const GradedClass& c, const SigmaBasisPtr& basis) {
  if (c.ring != model.ring) throw ArithmeticError("class does not live on the stratum model");
  SigmaChowVector out(basis);
  const int d = model.dim();
  const RingElem x = c.as_cohomology();
  const RingElem e = model.hyperplane();
  for (int k = 0; k <= d; ++k) {
    const RatFuncY coeff = (x.part(d - k) * e.pow(k)).top();
    if (coeff.is_zero()) continue;
    const int label = k == d ? basis->fundamental_label(model.stratum.edge) : basis->shared_label(k);
    if (label < 0) throw ArithmeticError("degree overflow: no Sigma label in degree " + std::to_string(k));
    out.coeffs[static_cast<std::size_t>(label)] += coeff;
  }
  return out;
}

ChowDims chow_dims(const Arrangement& a) {
  const int n = a.n();
  ChowDims d;
  d.ch_x.assign(static_cast<std::size_t>(n) + 1, 0);
  d.ch_sigma.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int k = 0; k < n - 1; ++k) d.ch_x[static_cast<std::size_t>(k)] = 1;
  d.ch_x[static_cast<std::size_t>(n - 1)] = a.size();

  const auto strata = sigma_strata(a);
  int multiple = 0, sigma2_codim2 = 0;
  for (const auto& h : a.hyperplanes()) multiple += h.mult >= 2 ? 1 : 0;
  for (const auto& s : strata) {
    if (s.codim != 2) continue;
    const Edge& e = a.edges()[static_cast<std::size_t>(s.edge)];
    const bool in1 = std::any_of(e.I.begin(), e.I.end(), [&](int j) { return a.hyperplanes()[static_cast<std::size_t>(j)].mult >= 2; });
    sigma2_codim2 += in1 ? 0 : 1;
  }
  d.ch_sigma[static_cast<std::size_t>(n - 1)] = multiple;
  if (n >= 2) d.ch_sigma[static_cast<std::size_t>(n - 2)] = sigma2_codim2 + (multiple > 0 ? 1 : 0);
  for (int k = 0; k <= n - 3; ++k) d.ch_sigma[static_cast<std::size_t>(k)] = strata.empty() ? 0 : 1;
  return d;
}

std::vector<int> homology_weight_dims(const Arrangement& a) {
  const int n = a.n();
  std::vector<int> w(static_cast<std::size_t>(2 * n) + 1, 0);
  for (int k = 0; k <= 2 * n - 4; k += 2) w[static_cast<std::size_t>(k)] = 1;
  w[static_cast<std::size_t>(2 * n - 2)] = a.size();
  return w;
}

}  // namespace hmc
