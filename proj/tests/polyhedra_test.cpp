#include <gtest/gtest.h>

#include <random>

#include "idealis/combinat.hpp"
#include "idealis/polyhedra.hpp"
#include "oracles.hpp"

using namespace idealis;

namespace {

const MonomialIdeal kFig2(2, {{1, 4}, {3, 2}, {5, 1}});
const MonomialIdeal kExample3(3, {{3, 0, 0}, {1, 1, 1}, {0, 2, 1}});

std::vector<oracle::Point> points(const MonomialIdeal& i) {
  std::vector<oracle::Point> out;
  for (const Monomial& g : i.generators()) out.emplace_back(g.exponents().begin(), g.exponents().end());
  return out;
}

}  // namespace

TEST(Newton, FigureTwoFacets) {
  const NewtonPolyhedron np = newton_polyhedron(kFig2);
  const std::vector<Facet> expected{{{0, 1}, 1}, {{1, 0}, 1}, {{1, 1}, 5}, {{1, 2}, 7}};
  EXPECT_EQ(np.facets(), expected);
}

TEST(Newton, PrincipalIsTranslatedOrthant) {
  const NewtonPolyhedron np = newton_polyhedron(MonomialIdeal(2, {{2, 1}}));
  const std::vector<Facet> expected{{{0, 1}, 1}, {{1, 0}, 2}};
  EXPECT_EQ(np.facets(), expected);
}

TEST(Newton, CoefficientBoundAndMembershipAgainstHull) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 40; ++t) {
    const auto i = oracle::random_ideal(rng, 3, 4, 3);
    const NewtonPolyhedron np = newton_polyhedron(i);
    const std::int64_t d = i.max_degree();
    for (const Facet& f : np.facets()) {
      const std::int64_t s = std::popcount(f.support());
      std::int64_t cap = s;
      for (std::int64_t k = 1; k < s; ++k) cap *= d;
      for (std::int64_t a : f.normal) EXPECT_LE(a, cap) << i.to_string();
    }
    for (std::int64_t a = 0; a <= 4; ++a)
      for (std::int64_t b = 0; b <= 4; ++b)
        for (std::int64_t c = 0; c <= 4; ++c) {
          const oracle::Point x{a, b, c};
          EXPECT_EQ(np_contains(np, 1, x), oracle::in_scaled_hull(i.generators(), 1, x)) << i.to_string();
        }
  }
}

TEST(Newton, Containment) {
  const NewtonPolyhedron np = newton_polyhedron(kFig2);
  const std::vector<std::int64_t> mid{2, 3}, low{4, 1}, gen{3, 2};
  EXPECT_TRUE(np_contains(np, 1, mid));
  EXPECT_FALSE(np_contains(np, 1, low));
  EXPECT_TRUE(np_contains(np, 1, gen));
}

TEST(Closure, FigureTwoAddsOneGenerator) {
  const MonomialIdeal closure = integral_closure_power(kFig2, 1);
  EXPECT_EQ(closure, MonomialIdeal(2, {{1, 4}, {2, 3}, {3, 2}, {5, 1}}));
  EXPECT_EQ(points(closure), oracle::closure_generators(kFig2, 1));
}

TEST(Closure, SmallCases) {
  const MonomialIdeal c4 = edge_ideal(Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
  EXPECT_EQ(integral_closure_power(c4, 1), c4);
  EXPECT_EQ(integral_closure_power(MonomialIdeal(1, {{3}}), 2), MonomialIdeal(1, {{6}}));
}

TEST(Closure, MatchesBoxScan) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 25; ++t) {
    const auto i = oracle::random_ideal(rng, 3, 3, 2);
    for (int n = 1; n <= 2; ++n) {
      EXPECT_EQ(points(integral_closure_power(i, n)), oracle::closure_generators(i, n)) << i.to_string() << " n=" << n;
    }
  }
}

TEST(Spread, Examples) {
  EXPECT_EQ(analytic_spread(kFig2), 2);
  EXPECT_EQ(analytic_spread(MonomialIdeal(3, {{1, 2, 0}})), 1);
  EXPECT_EQ(analytic_spread(kExample3), 3);
}

TEST(Spread, MatchesFaceOracle) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 80; ++t) {
    const auto i = oracle::random_ideal(rng, 4, 5, 3);
    EXPECT_EQ(analytic_spread(i), oracle::analytic_spread(i)) << i.to_string();
  }
}

TEST(Region, LatticePoints) {
  MixedRegion rg;
  rg.arity = 2;
  rg.strict.push_back({{1, 1}, 5});
  rg.weak.push_back({{1, 2}, 7});
  EXPECT_EQ(region_has_lattice_point(rg, 10), (IntVector{0, 4}));

  MixedRegion bad;
  bad.arity = 1;
  bad.strict.push_back({{1}, 1});
  bad.weak.push_back({{1}, 1});
  EXPECT_FALSE(region_has_lattice_point(bad, 5));

  MixedRegion none;
  none.arity = 3;
  EXPECT_EQ(region_has_lattice_point(none, 1), (IntVector{0, 0, 0}));
}

TEST(Region, WitnessesSatisfyTheRegion) {
  const NewtonPolyhedron np = newton_polyhedron(kExample3);
  const std::vector<std::int64_t> beta{0, 0, 0};
  for (int n = 2; n <= 4; ++n) {
    const MixedRegion rg = mixed_region(np, 1, beta, n);
    const auto x = region_has_lattice_point(rg, 12);
    ASSERT_TRUE(x);
    EXPECT_TRUE(rg.contains(*x));
  }
}
