#include <gtest/gtest.h>

#include "hmc/corpus.hpp"
#include "hmc/error.hpp"
#include "hmc/strata.hpp"
#include "support.hpp"

namespace hmc {
namespace {

using test::Gen;
using test::Q;

Arrangement make(int n, std::vector<std::vector<long>> rows, std::vector<long> mults) {
  std::vector<Hyperplane> hs;
  for (std::size_t i = 0; i < rows.size(); ++i) hs.push_back(Hyperplane{Covector(rows[i].begin(), rows[i].end()), mults[i]});
  return Arrangement::build(n, std::move(hs));
}

StratumModel model_of(const Arrangement& a, const std::string& key) {
  for (const auto& s : sigma_strata(a))
    if (edge_key(a.edges()[static_cast<std::size_t>(s.edge)].I, a.size()) == key) return compactify(a, s);
  ADD_FAILURE() << "no stratum " << key;
  return {};
}

// A bare model with boundary divisors of the given classes.
StratumModel bare_model(int dim, RingPtr ring, const std::vector<RingElem>& divisors) {
  StratumModel m;
  m.stratum.dim = dim;
  m.stratum.codim = 1;
  m.stratum.m_S = 1;
  m.kind = dim == 1 ? ModelKind::kCurve : ModelKind::kSurface;
  m.ring = std::move(ring);
  m.n = dim + 1;
  m.m = 1;
  for (const auto& d : divisors) {
    BoundaryDivisor b;
    b.cls = d;
    m.boundary.push_back(b);
  }
  return m;
}

// A double plane in P^3 meeting x1, x2, x1 + x2 (concurrent on it) and x3.
Arrangement double_plane_with_triple_point() {
  return make(3, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 1, 1, 0}, {0, 0, 0, 1}}, {2, 1, 1, 1, 1});
}

std::vector<Arrangement> random_arrangements(std::uint64_t seed, int count) {
  Gen g(seed);
  std::vector<Arrangement> out;
  for (int i = 0; i < count; ++i) {
    const int n = static_cast<int>(g.range(2, 3));
    out.push_back(g.arrangement(n, static_cast<int>(g.range(2, n == 2 ? 6 : 5)), 3));
  }
  return out;
}

TEST(Strata, CompactifyShapes) {
  const auto gen2 = make(3, {{1, 0, 0, 0}, {0, 1, 0, 0}}, {1, 1});
  const StratumModel line = model_of(gen2, "12");
  EXPECT_EQ(line.kind, ModelKind::kCurve);
  ASSERT_EQ(line.boundary.size(), 1U);
  EXPECT_EQ(line.boundary[0].source, BoundarySource::kInfinity);

  const StratumModel dl = model_of(corpus_arrangement("doubleline"), "1");
  EXPECT_EQ(dl.kind, ModelKind::kCurve);
  EXPECT_EQ(dl.boundary.size(), 1U);

  const auto generic = make(3, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, {2, 1, 1, 1});
  const StratumModel plane = model_of(generic, "1");
  EXPECT_EQ(plane.kind, ModelKind::kSurface);
  EXPECT_TRUE(plane.blown.empty());
  EXPECT_EQ(plane.boundary.size(), 4U);

  const StratumModel blown = model_of(double_plane_with_triple_point(), "1");
  ASSERT_EQ(blown.blown.size(), 1U);
  EXPECT_EQ(edge_key(double_plane_with_triple_point().edges()[static_cast<std::size_t>(blown.blown[0])].I, 5), "1234");
  EXPECT_EQ(blown.boundary.back().id, "X_inf");

  const auto p4 = make(4, {{1, 0, 0, 0, 0}}, {2});
  try {
    compactify(p4, sigma_strata(p4).front());
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("unsupported stratum dimension"), std::string::npos);
  }
}

TEST(Strata, Residues) {
  EXPECT_EQ(residues(model_of(corpus_arrangement("doubleline"), "1")), std::vector<long>{0});
  const StratumModel l12 = model_of(corpus_arrangement("fourplanes"), "12");
  ASSERT_EQ(l12.boundary.size(), 3U);
  EXPECT_EQ(l12.boundary[0].id, "E_{123}");
  EXPECT_EQ(l12.boundary[0].residue, 1);
  EXPECT_EQ(l12.boundary.back().residue, 0);  // m_S | m
}

TEST(Strata, DeligneDegrees) {
  const StratumModel dl = model_of(corpus_arrangement("doubleline"), "1");
  EXPECT_EQ(deligne_class(dl, 1).top(), RatFuncY(-1));
  const StratumModel pencil = model_of(corpus_arrangement("pencil3planes"), "123");
  for (long k = 1; k <= 3; ++k) EXPECT_EQ(deligne_class(pencil, k).top(), RatFuncY(-1)) << k;
  const StratumModel pt = model_of(corpus_arrangement("concurrent3"), "123");
  EXPECT_TRUE(deligne_class(pt, 3).is_zero());
  EXPECT_THROW(deligne_class(pt, 0), ValidationError);
  EXPECT_THROW(deligne_class(pt, 4), ValidationError);
}

TEST(Strata, LogChernDegrees) {
  const RingPtr p1 = IntersectionRing::projective(1);
  const RingElem pt = RingElem::basis(p1, 1);
  EXPECT_EQ(log_chern(bare_model(1, p1, {pt, pt}), 1).chern.front().top(), RatFuncY(0));
  EXPECT_EQ(log_chern(bare_model(1, p1, {pt, pt, pt}), 1).chern.front().top(), RatFuncY(1));
  const RingPtr s = IntersectionRing::blown_up_plane(0);
  const RingElem e = RingElem::basis(s, 1);
  EXPECT_TRUE(log_chern(bare_model(2, s, {e, e, e}), 2).chern.front().is_zero());
  // Omega^1(log D) of P^2 with 3 lines is trivial
  const ChernData om = log_chern(bare_model(2, s, {e, e, e}), 1);
  EXPECT_EQ(om.rank, 2);
  EXPECT_EQ(om.total(), RingElem::one(s));
  EXPECT_THROW(log_chern(bare_model(1, p1, {pt}), 2), ValidationError);
}

TEST(Strata, SurfaceIntersectionNumbers) {
  const Arrangement a = double_plane_with_triple_point();
  const StratumModel m = model_of(a, "1");
  std::vector<const BoundaryDivisor*> lines;
  for (const auto& d : m.boundary)
    if (d.source != BoundarySource::kExceptional) lines.push_back(&d);
  ASSERT_EQ(lines.size(), 5U);  // four induced lines and infinity
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      bool common = false;
      for (int p : m.blown) {
        const auto& P = a.edges()[static_cast<std::size_t>(p)].I;
        auto through = [&](const BoundaryDivisor* d) {
          if (d->source == BoundarySource::kInfinity) return false;
          const auto& L = a.edges()[static_cast<std::size_t>(d->edge)].I;
          return std::includes(P.begin(), P.end(), L.begin(), L.end());
        };
        common = common || (through(lines[i]) && through(lines[j]));
      }
      EXPECT_EQ((lines[i]->cls * lines[j]->cls).top(), RatFuncY(common ? 0 : 1)) << lines[i]->id << " " << lines[j]->id;
    }
  for (const auto& d : m.boundary)
    if (d.source == BoundarySource::kExceptional) EXPECT_EQ((d.cls * d.cls).top(), RatFuncY(-1));
}

TEST(Strata, SigmaLabels) {
  auto names = [](const Arrangement& a) {
    std::vector<std::string> out;
    const auto basis = SigmaChowBasis::of(a);
    for (const auto& l : basis->labels()) out.push_back(l.name);
    return out;
  };
  EXPECT_EQ(names(corpus_arrangement("doubleline")), (std::vector<std::string>{"L_{1}", "[P^0]"}));
  EXPECT_EQ(names(corpus_arrangement("pencil3planes")), (std::vector<std::string>{"L_{123}", "[P^0]"}));
  EXPECT_EQ(names(corpus_arrangement("triangle3")), (std::vector<std::string>{"P_{12}", "P_{13}", "P_{23}"}));
  EXPECT_EQ(names(corpus_arrangement("fourplanes")),
            (std::vector<std::string>{"L_{12}", "L_{13}", "L_{14}", "L_{23}", "L_{24}", "L_{34}", "[P^0]"}));
  EXPECT_EQ(names(double_plane_with_triple_point()),
            (std::vector<std::string>{"H_{1}", "L_{234}", "L_{25}", "L_{35}", "L_{45}", "[P^1]", "[P^0]"}));
  EXPECT_TRUE(SigmaChowBasis::of(make(2, {{1, 0, 0}}, {1}))->labels().empty());
}

TEST(Strata, PushToSigma) {
  const Arrangement four = corpus_arrangement("fourplanes");
  const auto basis = SigmaChowBasis::of(four);
  const StratumModel l12 = model_of(four, "12");
  const SigmaChowVector fund = push_to_sigma(l12, GradedClass::cap(RingElem::one(l12.ring)), basis);
  EXPECT_EQ(fund.at("L_{12}"), RatFuncY(1));
  EXPECT_TRUE(fund.at("[P^0]").is_zero());
  const SigmaChowVector pt = push_to_sigma(l12, GradedClass::cap(l12.point_class()), basis);
  EXPECT_EQ(pt.at("[P^0]"), RatFuncY(1));
  EXPECT_EQ(pt.trace(), RatFuncY(1));

  const Arrangement dp = double_plane_with_triple_point();
  const StratumModel s = model_of(dp, "1");
  const auto b = SigmaChowBasis::of(dp);
  const SigmaChowVector exc = push_to_sigma(s, GradedClass::cap(RingElem::basis(s.ring, 2)), b);
  EXPECT_TRUE(exc.is_zero());
  const SigmaChowVector e = push_to_sigma(s, GradedClass::cap(s.hyperplane()), b);
  EXPECT_EQ(e.at("[P^1]"), RatFuncY(1));
}

TEST(Strata, ChowDims) {
  const auto four = chow_dims(corpus_arrangement("fourplanes"));
  EXPECT_EQ(four.ch_sigma, (std::vector<int>{1, 6, 0, 0}));
  EXPECT_EQ(four.ch_x, (std::vector<int>{1, 1, 4, 0}));
  for (const char* name : {"triangle3", "concurrent3", "sixlines_a"}) {
    const Arrangement a = corpus_arrangement(name);
    const auto d = chow_dims(a);
    EXPECT_EQ(d.ch_x[1], a.size());
    EXPECT_EQ(d.ch_x[0], 1);
    const auto w = homology_weight_dims(a);
    EXPECT_EQ(w, (std::vector<int>{1, 0, a.size(), 0, 0}));
  }
  EXPECT_EQ(homology_weight_dims(corpus_arrangement("fourplanes")), (std::vector<int>{1, 0, 1, 0, 4, 0, 0}));
}

TEST(StrataProperty, ResidueWindowsAndPowerIdentity) {
  for (const auto& a : random_arrangements(61, 40))
    for (const auto& s : sigma_strata(a)) {
      const StratumModel m = compactify(a, s);
      EXPECT_TRUE(power_identity_holds(m));
      for (const auto& d : m.boundary) {
        const Rational r(d.residue, m.m_S());
        EXPECT_TRUE(r >= Rational(0) && r < Rational(1));
      }
      for (long k = 1; k <= m.m_S(); ++k) {
        for (const auto& r : deligne_residues(m, k, ResidueWindow::kLeftOpen)) EXPECT_TRUE(r > Rational(0) && r <= Rational(1));
        for (const auto& r : deligne_residues(m, k, ResidueWindow::kRightOpen)) EXPECT_TRUE(r >= Rational(0) && r < Rational(1));
        // m_S-th power: k c1(L) differs from the Deligne class by boundary divisors only
        RingElem diff = deligne_class(m, k) - deligne_base_class(m) * RatFuncY(Rational(k));
        RingElem bsum(m.ring);
        const auto res = deligne_residues(m, k, ResidueWindow::kLeftOpen);
        for (std::size_t i = 0; i < m.boundary.size(); ++i)
          bsum += m.boundary[i].cls * RatFuncY(Rational(k * m.boundary[i].residue, m.m_S()) - res[i]);
        EXPECT_EQ(diff, bsum);
      }
    }
}

TEST(StrataProperty, LabelsMatchChowDims) {
  for (const auto& a : random_arrangements(62, 40)) {
    const auto basis = SigmaChowBasis::of(a);
    std::vector<int> count(static_cast<std::size_t>(a.n()) + 1, 0);
    for (const auto& l : basis->labels()) ++count[static_cast<std::size_t>(l.degree)];
    EXPECT_EQ(count, chow_dims(a).ch_sigma);
    for (std::size_t i = 1; i < basis->labels().size(); ++i)
      EXPECT_LE(basis->labels()[i - 1].codim, basis->labels()[i].codim);
  }
}

TEST(StrataProperty, PushPreservesDegree) {
  Gen g(63);
  for (const auto& a : random_arrangements(64, 30)) {
    const auto basis = SigmaChowBasis::of(a);
    for (const auto& s : sigma_strata(a)) {
      const StratumModel m = compactify(a, s);
      RingElem x(m.ring);
      for (int i = 0; i < m.ring->size(); ++i) x[i] = RatFuncY(Rational(g.range(-3, 3)));
      const SigmaChowVector v = push_to_sigma(m, GradedClass::cap(x), basis);
      EXPECT_EQ(v.trace(), x.top());
    }
  }
}

}  // namespace
}  // namespace hmc
