#include <gtest/gtest.h>

#include <map>
#include <set>

#include "hmc/arrangement.hpp"
#include "hmc/corpus.hpp"
#include "hmc/error.hpp"
#include "support.hpp"

namespace hmc {
namespace {

using test::Gen;
using test::P;

Arrangement make(int n, std::vector<std::vector<long>> rows, std::vector<long> mults = {}) {
  std::vector<Hyperplane> hs;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Covector c(rows[i].begin(), rows[i].end());
    hs.push_back(Hyperplane{c, mults.empty() ? 1 : mults[i]});
  }
  return Arrangement::build(n, std::move(hs));
}

std::vector<Covector> covs(const Arrangement& a, const std::vector<int>& I) {
  std::vector<Covector> out;
  for (int j : I) out.push_back(a.hyperplanes()[static_cast<std::size_t>(j)].coeffs);
  return out;
}

std::vector<int> subset(unsigned mask, int size) {
  std::vector<int> I;
  for (int j = 0; j < size; ++j)
    if (mask & (1U << j)) I.push_back(j);
  return I;
}

// Oracle: every subset, keep the saturated ones of rank 1..n.
std::map<std::vector<int>, int> brute_force_edges(const Arrangement& a) {
  std::map<std::vector<int>, int> out;
  const int m = a.size();
  for (unsigned mask = 1; mask < (1U << m); ++mask) {
    const auto I = subset(mask, m);
    const int r = vector_rank(covs(a, I));
    if (r > a.n()) continue;
    bool saturated = true;
    for (int j = 0; j < m && saturated; ++j) {
      if (mask & (1U << j)) continue;
      auto J = I;
      J.push_back(j);
      saturated = vector_rank(covs(a, J)) > r;
    }
    if (saturated) out[I] = r;
  }
  return out;
}

// Oracle: decomposable iff some bipartition splits the rank.
bool brute_force_dense(const Arrangement& a, const Edge& e) {
  const int k = static_cast<int>(e.I.size());
  if (k == 1) return true;
  for (unsigned mask = 1; mask + 1 < (1U << k); ++mask) {
    std::vector<int> A, B;
    for (int i = 0; i < k; ++i) ((mask & (1U << i)) ? A : B).push_back(e.I[static_cast<std::size_t>(i)]);
    if (vector_rank(covs(a, A)) + vector_rank(covs(a, B)) == e.codim) return false;
  }
  return true;
}

// Oracle: chi of P^{c-1} minus the localized arrangement by inclusion-exclusion.
long inclusion_exclusion_local_chi(const Arrangement& a, const Edge& e) {
  const int k = static_cast<int>(e.I.size());
  long chi = 0;
  for (unsigned mask = 0; mask < (1U << k); ++mask) {
    std::vector<int> J;
    for (int i = 0; i < k; ++i)
      if (mask & (1U << i)) J.push_back(e.I[static_cast<std::size_t>(i)]);
    const long sign = J.size() % 2 == 0 ? 1 : -1;
    chi += sign * (e.codim - vector_rank(covs(a, J)));
  }
  return chi;
}

Poly chi_y_pn(int d) {
  Poly p;
  for (int k = 0; k <= d; ++k) p += Poly::monomial(Rational(k % 2 == 0 ? 1 : -1), k);
  return p;
}

// Oracle: chi_y is additive, so inclusion-exclusion over intersections of
// hyperplanes gives chi_y(X) directly from ranks.
Poly inclusion_exclusion_chi_y(const Arrangement& a) {
  Poly out;
  const int m = a.size();
  for (unsigned mask = 1; mask < (1U << m); ++mask) {
    const auto J = subset(mask, m);
    const int r = vector_rank(covs(a, J));
    if (r > a.n()) continue;
    const Poly term = chi_y_pn(a.n() - r);
    if (J.size() % 2 == 1)
      out += term;
    else
      out -= term;
  }
  return out;
}

std::vector<Arrangement> random_arrangements(std::uint64_t seed, int count) {
  Gen g(seed);
  std::vector<Arrangement> out;
  for (int i = 0; i < count; ++i) {
    const int n = static_cast<int>(g.range(2, 3));
    const int k = static_cast<int>(g.range(2, n == 2 ? 7 : 6));
    out.push_back(g.arrangement(n, k, 3));
  }
  return out;
}

TEST(Arrangement, EdgesOfSmallExamples) {
  const Arrangement tri = corpus_arrangement("triangle3");
  EXPECT_EQ(tri.edges().size(), 6U);
  int points = 0;
  for (const auto& e : tri.edges())
    if (e.codim == 2) {
      ++points;
      EXPECT_EQ(e.I.size(), 2U);
      EXPECT_EQ(e.m_S, 2);
    }
  EXPECT_EQ(points, 3);

  const Arrangement conc = corpus_arrangement("concurrent3");
  ASSERT_EQ(conc.edges().size(), 4U);
  EXPECT_EQ(conc.edges().back().I, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(conc.edges().back().m_S, 3);

  const Arrangement four = corpus_arrangement("fourplanes");
  std::map<int, int> by_codim;
  for (const auto& e : four.edges()) ++by_codim[e.codim];
  EXPECT_EQ(by_codim, (std::map<int, int>{{1, 4}, {2, 6}, {3, 4}}));
}

TEST(Arrangement, SigmaStrata) {
  const auto dl = sigma_strata(corpus_arrangement("doubleline"));
  ASSERT_EQ(dl.size(), 1U);
  EXPECT_EQ(dl[0].dim, 1);
  EXPECT_TRUE(dl[0].boundary.empty());
  EXPECT_EQ(sigma_strata(corpus_arrangement("triangle3")).size(), 3U);
  EXPECT_TRUE(sigma_strata(make(2, {{1, 2, 3}})).empty());
}

TEST(Arrangement, InputErrors) {
  EXPECT_THROW(make(0, {{1}}), InputError);
  EXPECT_THROW(make(2, {}), InputError);
  EXPECT_THROW(make(2, {{1, 0}}), InputError);
  EXPECT_THROW(make(2, {{0, 0, 0}}), InputError);
  EXPECT_THROW(make(2, {{1, 0, 0}}, {0}), InputError);
  EXPECT_THROW(make(2, {{1, 2, 0}, {-2, -4, 0}}), InputError);
}

TEST(Arrangement, EdgeKeys) {
  EXPECT_EQ(edge_key({0, 1, 2}, 3), "123");
  EXPECT_EQ(edge_key({0, 9, 11}, 12), "1,10,12");
  EXPECT_EQ(edge_key({4}, 9), "5");
}

TEST(Arrangement, DenseExamples) {
  const Arrangement tri = corpus_arrangement("triangle3");
  const Arrangement conc = corpus_arrangement("concurrent3");
  EXPECT_FALSE(is_dense(tri.edges().back(), tri));
  EXPECT_TRUE(is_dense(conc.edges().back(), conc));
  EXPECT_TRUE(is_dense(conc.edges().front(), conc));

  const auto triple = localize(conc, conc.edges().back());
  EXPECT_EQ(complement_chi(triple), -1);
  EXPECT_EQ(milnor_fiber_chi(triple), -3);
  const auto node = localize(tri, tri.edges().back());
  EXPECT_EQ(complement_chi(node), 0);
  EXPECT_EQ(milnor_fiber_chi(node), 0);
  const Arrangement four = corpus_arrangement("fourplanes");
  const auto boolean = localize(four, four.edges().back());
  EXPECT_EQ(boolean.rank, 3);
  EXPECT_EQ(milnor_fiber_chi(boolean), 0);
}

TEST(Arrangement, ChiYExamples) {
  EXPECT_EQ(chi_y(corpus_arrangement("concurrent3"), ChiTarget::kX), P({"1", "-3"}));
  EXPECT_EQ(chi_y(corpus_arrangement("triangle3"), ChiTarget::kX), P({"0", "-3"}));
  EXPECT_EQ(chi_y(corpus_arrangement("fourplanes"), ChiTarget::kX), P({"2", "2", "4"}));
  EXPECT_EQ(chi_y_projective(2), P({"1", "-1", "1"}));
  const Arrangement tri = corpus_arrangement("triangle3");
  EXPECT_EQ(chi_y(tri, ChiTarget::kComplement), P({"1", "2", "1"}));  // (C*)^2
  EXPECT_EQ(chi_y_open_stratum(tri, 0), P({"-1", "-1"}));            // P^1 minus 2 points
}

TEST(ArrangementProperty, EdgesMatchBruteForce) {
  for (const auto& a : random_arrangements(41, 40)) {
    std::map<std::vector<int>, int> got;
    for (const auto& e : a.edges()) {
      got[e.I] = e.codim;
      EXPECT_EQ(e.m_S, a.mult_sum(e.I));
      EXPECT_EQ(static_cast<int>(e.span.size()), a.n() + 1 - e.codim);
      for (const auto& v : e.span)
        for (int j : e.I) {
          Rational dot;
          for (std::size_t i = 0; i < v.size(); ++i) dot += v[i] * a.hyperplanes()[static_cast<std::size_t>(j)].coeffs[i];
          EXPECT_TRUE(dot.is_zero());
        }
    }
    EXPECT_EQ(got, brute_force_edges(a));
  }
}

TEST(ArrangementProperty, EdgesClosedUnderIntersection) {
  for (const auto& a : random_arrangements(42, 30)) {
    const auto& L = a.lattice();
    for (const auto& e : a.edges())
      for (const auto& f : a.edges()) {
        std::vector<int> U;
        std::set_union(e.I.begin(), e.I.end(), f.I.begin(), f.I.end(), std::back_inserter(U));
        const auto C = L.closure(U);
        const int flat = L.find(C);
        ASSERT_GE(flat, 0);
        EXPECT_EQ(a.edge_of_flat(flat) >= 0, L.flats()[static_cast<std::size_t>(flat)].rank <= a.n());
      }
  }
}

TEST(ArrangementProperty, DenseIffNonzeroChi) {
  for (const auto& a : random_arrangements(43, 40))
    for (const auto& e : a.edges()) {
      const auto l = localize(a, e);
      const long chi = complement_chi(l);
      EXPECT_EQ(chi, inclusion_exclusion_local_chi(a, e));
      EXPECT_EQ(is_dense(e, a), brute_force_dense(a, e)) << edge_key(e.I, a.size());
      EXPECT_EQ(is_dense(e, a), chi != 0) << edge_key(e.I, a.size());
      EXPECT_EQ(milnor_fiber_chi(l), chi * e.m_S);
    }
}

TEST(ArrangementProperty, ChiYMatchesInclusionExclusion) {
  for (const auto& a : random_arrangements(44, 40)) {
    const Poly x = chi_y(a, ChiTarget::kX);
    EXPECT_EQ(x, inclusion_exclusion_chi_y(a));
    EXPECT_EQ(chi_y(a, ChiTarget::kComplement), chi_y_pn(a.n()) - x);
    Poly strata;
    for (const auto& e : a.edges()) strata += chi_y_open_stratum(a, e.id);
    EXPECT_EQ(strata, x);
    // Euler characteristic at y = -1 by plain inclusion-exclusion
    long chi = 0;
    for (unsigned mask = 1; mask < (1U << a.size()); ++mask) {
      const auto J = subset(mask, a.size());
      const int r = vector_rank(covs(a, J));
      chi += (J.size() % 2 == 1 ? 1 : -1) * (r > a.n() ? 0 : a.n() + 1 - r);
    }
    EXPECT_EQ(x.eval(Rational(-1)), Rational(chi));
  }
}

TEST(ArrangementProperty, MultiplicityAdditivity) {
  for (const auto& a : random_arrangements(45, 40))
    for (const auto& s : sigma_strata(a))
      for (const auto& sub : s.boundary) {
        const Edge& inner = a.edges()[static_cast<std::size_t>(sub.edge)];
        EXPECT_EQ(inner.m_S, s.m_S + sub.m_rel);
        EXPECT_EQ(sub.rel_codim, inner.codim - s.codim);
        EXPECT_TRUE(std::includes(inner.I.begin(), inner.I.end(), a.edges()[static_cast<std::size_t>(s.edge)].I.begin(),
                                  a.edges()[static_cast<std::size_t>(s.edge)].I.end()));
      }
}

TEST(ArrangementProperty, ComplementPoincareDivisible) {
  // The central complement fibres over the projective one with fibre C*.
  for (const auto& a : random_arrangements(46, 30)) {
    const Poly pi = a.lattice().poincare_from(0);
    const auto [q, r] = Poly::divmod(pi, P({"1", "1"}));
    EXPECT_TRUE(r.is_zero());
    EXPECT_EQ(pi.coeff(1), Rational(a.size()));
  }
}

}  // namespace
}  // namespace hmc
