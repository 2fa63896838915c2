#include <gtest/gtest.h>

#include <random>

#include "idealis/assoc.hpp"
#include "idealis/cohomology.hpp"
#include "idealis/combinat.hpp"
#include "idealis/polyhedra.hpp"
#include "oracles.hpp"

using namespace idealis;

namespace {

Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (coin(rng)) e.emplace_back(u, v);
    }
  }
  return Graph(n, e);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto e = a.edges();
  for (auto [u, v] : b.edges()) e.emplace_back(u + a.vertex_count(), v + a.vertex_count());
  return Graph(a.vertex_count() + b.vertex_count(), e);
}

bool all_min(const AssProfile& p) {
  for (const PrimeSet& e : p.entries) {
    if (!(e == p.min_primes)) return false;
  }
  return true;
}

}  // namespace

TEST(Graphs, BipartiteIffNoEmbeddedPrimesOnLargerGraphs) {
  std::mt19937_64 rng(71);
  int tested = 0;
  while (tested < 150) {
    const Graph g = random_graph(rng, 7 + tested % 2, 0.35);
    if (g.edges().empty()) continue;
    ++tested;
    EXPECT_EQ(all_min(ass_profile(edge_ideal(g), PowerKind::ordinary, 4)), is_bipartite(g));
  }
}

TEST(Graphs, EdgeIdealAssAscends) {
  std::mt19937_64 rng(72);
  for (int t = 0; t < 60; ++t) {
    const Graph g = random_graph(rng, 7, 0.4);
    if (g.edges().empty()) continue;
    EXPECT_TRUE(persistence_check(ass_profile(edge_ideal(g), PowerKind::ordinary, 4)).ok);
  }
}

TEST(Graphs, DisjointUnionBound) {
  const auto small = oracle::connected_graphs(4);
  int compared = 0;
  for (std::size_t i = 0; i < small.size(); ++i) {
    for (std::size_t j = i; j < small.size(); ++j) {
      const AssProfile a = ass_profile(edge_ideal(small[i]), PowerKind::ordinary, 5);
      const AssProfile b = ass_profile(edge_ideal(small[j]), PowerKind::ordinary, 5);
      const AssProfile u = ass_profile(edge_ideal(disjoint_union(small[i], small[j])), PowerKind::ordinary, 5);
      if (!a.resolved || !b.resolved || !u.resolved) continue;
      ++compared;
      EXPECT_LE(u.observed_astab, a.observed_astab + b.observed_astab - 1);
    }
  }
  EXPECT_GT(compared, 20);
}

TEST(Graphs, CoverIdealChromaticWindow) {
  for (const Graph& g : oracle::connected_graphs(5)) {
    const AssProfile p = ass_profile(cover_ideal(g), PowerKind::ordinary, 4);
    if (p.resolved) EXPECT_GE(p.observed_astab, chromatic_number(Hypergraph::from_graph(g)) - 1);
  }
}

TEST(Hypergraphs, CoverIdealChromaticWindow) {
  std::mt19937_64 rng(73);
  std::uniform_int_distribution<VarSet> set(1, 31);
  for (int t = 0; t < 40; ++t) {
    std::vector<VarSet> edges;
    for (int k = 0; k < 4; ++k) {
      const VarSet e = set(rng);
      if (std::popcount(e) >= 2) edges.push_back(e);
    }
    const MonomialIdeal sf = MonomialIdeal::from_supports(5, edges);
    if (sf.is_zero()) continue;
    std::vector<VarSet> minimal;
    for (const Monomial& g : sf.generators()) minimal.push_back(g.support());
    const Hypergraph h(5, minimal);
    const AssProfile p = ass_profile(cover_ideal(h), PowerKind::ordinary, 4);
    if (p.resolved) EXPECT_GE(p.observed_astab, chromatic_number(h) - 1);
  }
}

TEST(Hypergraphs, UnimodularCoverDepthIsNonIncreasing) {
  // Path on four vertices: depths 2, 1, 1 by all three depth computations.
  for (const Graph& g : oracle::connected_graphs(6)) {
    if (!is_bipartite(g)) continue;
    const DepthProfile p = depth_profile(cover_ideal(g), PowerKind::ordinary, 4);
    for (int n = 2; n <= 4; ++n) EXPECT_LE(p.at(n).depth, p.at(n - 1).depth);
    if (p.resolved) EXPECT_LE(p.observed_dstab, static_cast<int>(g.vertex_count()));
  }
}

TEST(Polymatroidal, StableFromAnalyticSpread) {
  // Square-free Veronese ideals, powers of the maximal ideal and products of variable ideals.
  std::vector<MonomialIdeal> cases;
  for (std::size_t r = 3; r <= 5; ++r) {
    for (std::size_t d = 2; d < r; ++d) cases.push_back(veronese_ideal(r, d));
  }
  cases.push_back(power(MonomialIdeal::maximal(3), 2));
  cases.push_back(multiply(MonomialIdeal::prime(4, 0b0011), MonomialIdeal::prime(4, 0b0110)));
  cases.push_back(multiply(MonomialIdeal::prime(4, 0b0111), MonomialIdeal::prime(4, 0b1100)));
  for (const MonomialIdeal& i : cases) {
    const int ell = analytic_spread(i);
    ASSERT_LE(ell, static_cast<int>(i.arity()));
    const AssProfile a = ass_profile(i, PowerKind::ordinary, ell + 2);
    const DepthProfile d = depth_profile(i, PowerKind::ordinary, ell + 2);
    for (int n = ell; n <= ell + 2; ++n) {
      EXPECT_EQ(a.at(n), a.at(ell)) << i.to_string();
      EXPECT_EQ(d.at(n).depth, d.at(ell).depth) << i.to_string();
    }
  }
}

TEST(Closure, ScalingDegreesScalesComplexes) {
  std::mt19937_64 rng(74);
  std::uniform_int_distribution<std::int64_t> coord(0, 5);
  for (int t = 0; t < 60; ++t) {
    const auto i = oracle::random_ideal(rng, 3, 4, 3);
    const NewtonPolyhedron np = newton_polyhedron(i);
    std::vector<std::int64_t> alpha(3);
    for (auto& a : alpha) a = coord(rng);
    for (int n = 2; n <= 3; ++n) {
      std::vector<std::int64_t> scaled(alpha);
      for (auto& a : scaled) a *= n;
      EXPECT_EQ(delta_alpha_closure(np, 1, alpha), delta_alpha_closure(np, n, scaled));
    }
  }
}

TEST(Symbolic, CoverDepthFormulaOnSevenVertices) {
  std::mt19937_64 rng(75);
  int tested = 0;
  while (tested < 12) {
    const Graph g = random_graph(rng, 7, 0.3);
    if (g.edges().empty()) continue;
    ++tested;
    const int nu0 = ordered_matching_number(g);
    const DepthProfile p = depth_profile(cover_ideal(g), PowerKind::symbolic, 2 * nu0);
    EXPECT_EQ(p.at(2 * nu0 - 1).depth, 7 - nu0 - 1);
    EXPECT_EQ(p.at(2 * nu0).depth, 7 - nu0 - 1);
  }
}
