#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hmc/polynomial.hpp"
#include "hmc/rational.hpp"

namespace hmc {

using Covector = std::vector<Rational>;

/// Rank of a family of vectors over Q.
int vector_rank(const std::vector<Covector>& rows);
/// Basis of the common kernel of the given covectors in Q^{dim}.
std::vector<Covector> kernel_basis(const std::vector<Covector>& rows, int dim);

/// Lattice of flats of a central arrangement: saturated index sets ordered by
/// inclusion, from the empty flat (rank 0) to the flat of all hyperplanes.
class Lattice {
 public:
  struct Flat {
    std::vector<int> I;  // sorted positions into the covector list
    int rank = 0;
  };

  explicit Lattice(std::vector<Covector> covectors);

  const std::vector<Covector>& covectors() const { return cov_; }
  /// Flats sorted by (rank, I); front() is the empty flat, back() the top.
  const std::vector<Flat>& flats() const { return flats_; }
  int top() const { return static_cast<int>(flats_.size()) - 1; }
  int rank() const { return flats_.back().rank; }
  /// Index of the flat with exactly this index set, or -1.
  int find(const std::vector<int>& I) const;
  /// I(F) subset of I(G).
  bool leq(int f, int g) const;
  /// mu(f, g) for every flat g (zero where g is not above f).
  std::vector<long> mobius_from(int f) const;
  /// sum_{g >= f} mu(f, g) (-t)^{rk g - rk f}: Poincare polynomial of the
  /// complement of the arrangement restricted to flat f.
  Poly poincare_from(int f) const;
  std::vector<int> closure(const std::vector<int>& I) const;

 private:
  std::vector<Covector> cov_;
  std::vector<Flat> flats_;
};

struct Hyperplane {
  Covector coeffs;
  long mult = 1;
};

/// A nonempty linear subspace cut out by hyperplanes of the arrangement.
struct Edge {
  int id = 0;                 // position in Arrangement::edges()
  int flat = 0;               // index into the lattice
  std::vector<int> I;         // saturated hyperplane index set (0-based)
  int codim = 0;              // codimension in P^n
  long m_S = 0;               // sum of multiplicities over I
  std::vector<Covector> span; // basis of the linear subspace of C^{n+1}
  int dim(int n) const { return n - codim; }
};

/// Projective hyperplane arrangement with multiplicities in P^n.
class Arrangement {
 public:
  /// Validates and builds the intersection lattice. Throws InputError on a
  /// zero or wrong-length covector, a proportional pair, or a multiplicity < 1.
  static Arrangement build(int n, std::vector<Hyperplane> hyperplanes);

  int n() const { return d_->n; }
  int size() const { return static_cast<int>(d_->hyperplanes.size()); }
  const std::vector<Hyperplane>& hyperplanes() const { return d_->hyperplanes; }
  /// Total degree m = sum m_j.
  long degree() const { return d_->m; }
  bool reduced() const;
  const Lattice& lattice() const { return *d_->lattice; }
  /// All edges, sorted by (codim, I). Excludes the empty top flat of an
  /// essential arrangement.
  const std::vector<Edge>& edges() const { return d_->edges; }
  /// Edge id of a flat, or -1 when the flat is not a nonempty edge.
  int edge_of_flat(int flat) const { return d_->edge_of_flat[static_cast<std::size_t>(flat)]; }
  long mult_sum(const std::vector<int>& I) const;

 private:
  struct Data {
    int n = 0;
    long m = 0;
    std::vector<Hyperplane> hyperplanes;
    std::unique_ptr<Lattice> lattice;
    std::vector<Edge> edges;
    std::vector<int> edge_of_flat;
  };
  std::shared_ptr<const Data> d_;
};

/// Canonical key of an index set: 1-based indices concatenated ("123") when
/// the arrangement has at most 9 hyperplanes, comma separated otherwise.
std::string edge_key(const std::vector<int>& I, int num_hyperplanes);

/// Convenience wrapper returning Arrangement::edges().
std::vector<Edge> edges(const Arrangement& a);

/// Boundary component S' of a stratum closure, with m_{S',S}.
struct SubEdge {
  int edge = 0;
  int rel_codim = 0;  // codim of S' inside the closure of S
  long m_rel = 0;     // sum of m_j over I(S') minus I(S)
};

/// Stratum of Sigma minus X' for a generic auxiliary hyperplane X'.
struct Stratum {
  int edge = 0;
  int dim = 0;
  int codim = 0;
  long m_S = 0;
  std::vector<SubEdge> boundary;  // all edges strictly inside the closure
};

/// Strata of Sigma minus X': every edge of codim >= 2, and every hyperplane of
/// multiplicity >= 2.
std::vector<Stratum> sigma_strata(const Arrangement& a);
Stratum make_stratum(const Arrangement& a, int edge);

/// Central arrangement of the hyperplanes through an edge, in the normal space.
struct LocalizedArrangement {
  int rank = 0;               // c_S
  std::vector<int> global;    // hyperplane indices of I(S)
  std::vector<long> mults;
  long m_S = 0;
  std::shared_ptr<const Lattice> lattice;
};

LocalizedArrangement localize(const Arrangement& a, const Edge& e);

/// True iff the localized arrangement is indecomposable.
bool is_dense(const Edge& e, const Arrangement& a);
bool is_dense(const LocalizedArrangement& l);

/// chi(P^{c-1} minus the projectivized localized arrangement).
long complement_chi(const LocalizedArrangement& l);
/// Euler characteristic of the Milnor fiber: complement_chi * m_S.
long milnor_fiber_chi(const LocalizedArrangement& l);

enum class ChiTarget { kX, kComplement, kProjectiveSpace };

/// chi_y genus with chi_y(P^d) = sum_{p <= d} (-y)^p.
Poly chi_y(const Arrangement& a, ChiTarget target);
/// chi_y of the open stratum of an edge: its closure minus all smaller edges.
Poly chi_y_open_stratum(const Arrangement& a, int edge);
/// chi_y(P^d).
Poly chi_y_projective(int d);

}  // namespace hmc
