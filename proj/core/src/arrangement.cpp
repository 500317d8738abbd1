#include "hmc/arrangement.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "hmc/error.hpp"

namespace hmc {

namespace {

// Row echelon form in place; returns the pivot columns.
std::vector<int> echelon(std::vector<Covector>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int cols = static_cast<int>(m.front().size());
  std::size_t row = 0;
  for (int c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][static_cast<std::size_t>(c)].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[row], m[p]);
    const Rational inv = Rational(1) / m[row][static_cast<std::size_t>(c)];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][static_cast<std::size_t>(c)].is_zero()) continue;
      const Rational f = m[r][static_cast<std::size_t>(c)];
      for (std::size_t k = 0; k < m[r].size(); ++k) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

std::vector<Covector> rows_of(const std::vector<Covector>& cov, const std::vector<int>& I) {
  std::vector<Covector> r;
  r.reserve(I.size());
  for (int j : I) r.push_back(cov[static_cast<std::size_t>(j)]);
  return r;
}

}  // namespace

int vector_rank(const std::vector<Covector>& rows) {
  std::vector<Covector> m = rows;
  return static_cast<int>(echelon(m).size());
}

std::vector<Covector> kernel_basis(const std::vector<Covector>& rows, int dim) {
  std::vector<Covector> m = rows;
  const auto pivots = echelon(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(dim), false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Covector> basis;
  for (int f = 0; f < dim; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    Covector v(static_cast<std::size_t>(dim), Rational(0));
    v[static_cast<std::size_t>(f)] = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[static_cast<std::size_t>(pivots[r])] = -m[r][static_cast<std::size_t>(f)];
    basis.push_back(std::move(v));
  }
  return basis;
}

Lattice::Lattice(std::vector<Covector> covectors) : cov_(std::move(covectors)) {
  std::vector<std::set<std::vector<int>>> layers(1);
  layers[0].insert(std::vector<int>{});
  const int n = static_cast<int>(cov_.size());
  for (std::size_t r = 0;; ++r) {
    std::set<std::vector<int>> next;
    for (const auto& F : layers[r]) {
      for (int j = 0; j < n; ++j) {
        if (std::binary_search(F.begin(), F.end(), j)) continue;
        std::vector<int> G = F;
        G.insert(std::upper_bound(G.begin(), G.end(), j), j);
        next.insert(closure(G));
      }
    }
    if (next.empty()) break;
    layers.push_back(std::move(next));
  }
  for (std::size_t r = 0; r < layers.size(); ++r)
    for (const auto& F : layers[r]) flats_.push_back(Flat{F, static_cast<int>(r)});
}

std::vector<int> Lattice::closure(const std::vector<int>& I) const {
  std::vector<Covector> m = rows_of(cov_, I);
  const int r = vector_rank(m);
  std::vector<int> out;
  for (int j = 0; j < static_cast<int>(cov_.size()); ++j) {
    if (std::binary_search(I.begin(), I.end(), j)) {
      out.push_back(j);
      continue;
    }
    m.push_back(cov_[static_cast<std::size_t>(j)]);
    if (vector_rank(m) == r) out.push_back(j);
    m.pop_back();
  }
  return out;
}

int Lattice::find(const std::vector<int>& I) const {
  for (std::size_t i = 0; i < flats_.size(); ++i)
    if (flats_[i].I == I) return static_cast<int>(i);
  return -1;
}

bool Lattice::leq(int f, int g) const {
  const auto& F = flats_[static_cast<std::size_t>(f)].I;
  const auto& G = flats_[static_cast<std::size_t>(g)].I;
  return std::includes(G.begin(), G.end(), F.begin(), F.end());
}

std::vector<long> Lattice::mobius_from(int f) const {
  std::vector<long> mu(flats_.size(), 0);
  mu[static_cast<std::size_t>(f)] = 1;
  for (int g = f + 1; g < static_cast<int>(flats_.size()); ++g) {
    if (!leq(f, g)) continue;
    long s = 0;
    for (int h = f; h < g; ++h)
      if (mu[static_cast<std::size_t>(h)] != 0 && leq(h, g)) s += mu[static_cast<std::size_t>(h)];
    mu[static_cast<std::size_t>(g)] = -s;
  }
  return mu;
}

Poly Lattice::poincare_from(int f) const {
  const auto mu = mobius_from(f);
  const int base = flats_[static_cast<std::size_t>(f)].rank;
  Poly p;
  for (std::size_t g = 0; g < flats_.size(); ++g) {
    if (mu[g] == 0) continue;
    const int k = flats_[g].rank - base;
    p += Poly::monomial(Rational(k % 2 == 0 ? mu[g] : -mu[g]), k);
  }
  return p;
}

Arrangement Arrangement::build(int n, std::vector<Hyperplane> hyperplanes) {
  if (n < 1) throw InputError("ambient dimension must be at least 1");
  if (hyperplanes.empty()) throw InputError("arrangement has no hyperplanes");
  auto d = std::make_shared<Data>();
  d->n = n;
  for (std::size_t j = 0; j < hyperplanes.size(); ++j) {
    const auto& h = hyperplanes[j];
    if (h.coeffs.size() != static_cast<std::size_t>(n + 1))
      throw InputError("hyperplane " + std::to_string(j + 1) + ": expected " + std::to_string(n + 1) + " coefficients");
    if (std::all_of(h.coeffs.begin(), h.coeffs.end(), [](const Rational& c) { return c.is_zero(); }))
      throw InputError("hyperplane " + std::to_string(j + 1) + ": zero covector");
    if (h.mult < 1) throw InputError("hyperplane " + std::to_string(j + 1) + ": non-positive multiplicity");
    for (std::size_t i = 0; i < j; ++i)
      if (vector_rank({hyperplanes[i].coeffs, h.coeffs}) == 1)
        throw InputError("proportional covectors: hyperplanes " + std::to_string(i + 1) + " and " + std::to_string(j + 1));
    d->m += h.mult;
  }
  d->hyperplanes = std::move(hyperplanes);
  std::vector<Covector> cov;
  for (const auto& h : d->hyperplanes) cov.push_back(h.coeffs);
  d->lattice = std::make_unique<Lattice>(std::move(cov));
  const auto& flats = d->lattice->flats();
  d->edge_of_flat.assign(flats.size(), -1);
  for (std::size_t f = 1; f < flats.size(); ++f) {
    if (flats[f].rank > n) continue;
    Edge e;
    e.id = static_cast<int>(d->edges.size());
    e.flat = static_cast<int>(f);
    e.I = flats[f].I;
    e.codim = flats[f].rank;
    for (int j : e.I) e.m_S += d->hyperplanes[static_cast<std::size_t>(j)].mult;
    e.span = kernel_basis(rows_of(d->lattice->covectors(), e.I), n + 1);
    d->edge_of_flat[f] = e.id;
    d->edges.push_back(std::move(e));
  }
  Arrangement a;
  a.d_ = std::move(d);
  return a;
}

bool Arrangement::reduced() const {
  return std::all_of(hyperplanes().begin(), hyperplanes().end(), [](const Hyperplane& h) { return h.mult == 1; });
}

long Arrangement::mult_sum(const std::vector<int>& I) const {
  long s = 0;
  for (int j : I) s += hyperplanes()[static_cast<std::size_t>(j)].mult;
  return s;
}

std::string edge_key(const std::vector<int>& I, int num_hyperplanes) {
  std::ostringstream os;
  for (std::size_t i = 0; i < I.size(); ++i) {
    if (i > 0 && num_hyperplanes > 9) os << ',';
    os << I[i] + 1;
  }
  return os.str();
}

std::vector<Edge> edges(const Arrangement& a) { return a.edges(); }

Stratum make_stratum(const Arrangement& a, int edge) {
  const Edge& e = a.edges()[static_cast<std::size_t>(edge)];
  Stratum s;
  s.edge = edge;
  s.codim = e.codim;
  s.dim = a.n() - e.codim;
  s.m_S = e.m_S;
  for (const auto& g : a.edges()) {
    if (g.id == e.id || !a.lattice().leq(e.flat, g.flat)) continue;
    s.boundary.push_back(SubEdge{g.id, g.codim - e.codim, g.m_S - e.m_S});
  }
  return s;
}

std::vector<Stratum> sigma_strata(const Arrangement& a) {
  std::vector<Stratum> out;
  for (const auto& e : a.edges())
    if (e.codim >= 2 || e.m_S >= 2) out.push_back(make_stratum(a, e.id));
  return out;
}

LocalizedArrangement localize(const Arrangement& a, const Edge& e) {
  LocalizedArrangement l;
  l.rank = e.codim;
  l.global = e.I;
  std::vector<Covector> cov;
  for (int j : e.I) {
    cov.push_back(a.hyperplanes()[static_cast<std::size_t>(j)].coeffs);
    l.mults.push_back(a.hyperplanes()[static_cast<std::size_t>(j)].mult);
  }
  l.m_S = e.m_S;
  l.lattice = std::make_shared<Lattice>(std::move(cov));
  return l;
}

bool is_dense(const LocalizedArrangement& l) {
  const auto& cov = l.lattice->covectors();
  const int k = static_cast<int>(cov.size());
  if (k <= 1) return true;
  // Components of the matroid: union of fundamental circuits w.r.t. a basis.
  std::vector<int> basis;
  std::vector<Covector> rows;
  for (int j = 0; j < k; ++j) {
    rows.push_back(cov[static_cast<std::size_t>(j)]);
    if (vector_rank(rows) > static_cast<int>(basis.size()))
      basis.push_back(j);
    else
      rows.pop_back();
  }
  UnionFind uf(k);
  for (int j = 0; j < k; ++j) {
    if (std::find(basis.begin(), basis.end(), j) != basis.end()) continue;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      std::vector<Covector> swapped = rows;
      swapped[b] = cov[static_cast<std::size_t>(j)];
      if (vector_rank(swapped) == static_cast<int>(basis.size())) uf.unite(j, basis[b]);
    }
  }
  const int root = uf.find(0);
  for (int j = 1; j < k; ++j)
    if (uf.find(j) != root) return false;
  return true;
}

bool is_dense(const Edge& e, const Arrangement& a) { return is_dense(localize(a, e)); }

long complement_chi(const LocalizedArrangement& l) {
  const Poly pi = l.lattice->poincare_from(0);
  const auto [q, r] = Poly::divmod(pi, Poly(std::vector<Rational>{Rational(1), Rational(1)}));
  if (!r.is_zero()) throw ArithmeticError("Poincare polynomial not divisible by 1 + t");
  return q.eval(Rational(-1)).to_long();
}

long milnor_fiber_chi(const LocalizedArrangement& l) { return complement_chi(l) * l.m_S; }

Poly chi_y_projective(int d) {
  Poly p;
  for (int k = 0; k <= d; ++k) p += Poly::monomial(Rational(k % 2 == 0 ? 1 : -1), k);
  return p;
}

namespace {

// chi_y of the complement in P^d of the arrangement induced on the flat f.
Poly chi_y_complement_of_flat(const Lattice& lat, int f, int d) {
  if (f == lat.top()) return chi_y_projective(d);
  const Poly pi = lat.poincare_from(f);
  const auto [b, r] = Poly::divmod(pi, Poly(std::vector<Rational>{Rational(1), Rational(1)}));
  if (!r.is_zero()) throw ArithmeticError("Poincare polynomial not divisible by 1 + t");
  // H^k has type (k,k); by duality it contributes (-1)^k b_k (-y)^{d-k}.
  Poly out;
  for (int k = 0; k <= b.degree(); ++k) {
    const int p = d - k;
    const int sign = ((k + p) % 2 == 0) ? 1 : -1;
    out += Poly::monomial(b.coeff(k) * Rational(sign), p);
  }
  return out;
}

}  // namespace

Poly chi_y_open_stratum(const Arrangement& a, int edge) {
  const Edge& e = a.edges()[static_cast<std::size_t>(edge)];
  return chi_y_complement_of_flat(a.lattice(), e.flat, e.dim(a.n()));
}

Poly chi_y(const Arrangement& a, ChiTarget target) {
  switch (target) {
    case ChiTarget::kProjectiveSpace:
      return chi_y_projective(a.n());
    case ChiTarget::kComplement:
      return chi_y_complement_of_flat(a.lattice(), 0, a.n());
    case ChiTarget::kX: {
      Poly s;
      for (const auto& e : a.edges()) s += chi_y_open_stratum(a, e.id);
      return s;
    }
  }
  throw ArithmeticError("unknown chi_y target");
}

}  // namespace hmc
