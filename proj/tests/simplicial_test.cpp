#include <gtest/gtest.h>

#include <random>

#include "idealis/cohomology.hpp"
#include "idealis/polyhedra.hpp"
#include "idealis/simplicial.hpp"
#include "oracles.hpp"

using namespace idealis;

namespace {

const MonomialIdeal kFig1(4, {{2, 0, 3, 1}, {0, 3, 0, 2}});
const SimplicialComplex kFig1Complex(4, {0b0111, 0b1001, 0b1100});

std::vector<std::size_t> homology(const SimplicialComplex& c) { return reduced_homology_dims(c, {}); }

}  // namespace

TEST(Delta, FigureOne) {
  EXPECT_EQ(delta_of_ideal(kFig1), kFig1Complex);
  EXPECT_EQ(delta_of_ideal(MonomialIdeal::maximal(3)), SimplicialComplex::empty_complex(3));
  EXPECT_EQ(delta_of_ideal(MonomialIdeal::zero(3)), SimplicialComplex::simplex(3));
}

TEST(Delta, StanleyReisnerRoundTrip) {
  for (const SimplicialComplex& c : oracle::complexes(4)) {
    EXPECT_EQ(delta_of_ideal(stanley_reisner_ideal(c)), c);
  }
}

TEST(Link, Examples) {
  EXPECT_EQ(link(kFig1Complex, 0b1000), SimplicialComplex(4, {0b0001, 0b0100}));
  EXPECT_EQ(link(kFig1Complex, 0), kFig1Complex);
  EXPECT_EQ(link(kFig1Complex, 0b0111), SimplicialComplex::empty_complex(4));
}

TEST(DeltaAlpha, Examples) {
  const MonomialIdeal x2(1, {{2}});
  EXPECT_EQ(delta_alpha(x2, std::vector<std::int64_t>{1}), SimplicialComplex::empty_complex(1));
  EXPECT_TRUE(delta_alpha(x2, std::vector<std::int64_t>{3}).is_void());
}

TEST(DeltaAlpha, MatchesDefinition) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::int64_t> coord(-2, 3);
  for (int t = 0; t < 150; ++t) {
    const auto i = oracle::random_ideal(rng, 4, 4, 3);
    std::vector<std::int64_t> alpha(4);
    for (auto& a : alpha) a = coord(rng);
    EXPECT_EQ(delta_alpha(i, alpha), oracle::delta_alpha(i.generators(), 4, alpha)) << i.to_string();
  }
}

TEST(DeltaAlpha, ClosureForm) {
  const NewtonPolyhedron np = newton_polyhedron(MonomialIdeal(2, {{1, 4}, {3, 2}, {5, 1}}));
  EXPECT_EQ(delta_alpha_closure(np, 1, std::vector<std::int64_t>{4, 1}), SimplicialComplex::empty_complex(2));
  EXPECT_TRUE(delta_alpha_closure(np, 1, std::vector<std::int64_t>{9, 9}).is_void());
  // alpha = 0: every facet is violated, faces are complements of facet supports.
  EXPECT_EQ(delta_alpha_closure(np, 1, std::vector<std::int64_t>{0, 0}), SimplicialComplex(2, {0b01, 0b10}));
}

TEST(DeltaAlpha, SymbolicForm) {
  EXPECT_EQ(delta_alpha_symbolic(kFig1Complex, 1, std::vector<std::int64_t>{0, 0, 0, 0}), kFig1Complex);
  const std::vector<std::int64_t> alpha{0, 1, 0, 1};
  EXPECT_EQ(delta_alpha_symbolic(kFig1Complex, 2, alpha), kFig1Complex);
  EXPECT_TRUE(delta_alpha_symbolic(kFig1Complex, 1, alpha).is_void());
}

TEST(Homology, Examples) {
  EXPECT_EQ(homology(SimplicialComplex(3, {0b011, 0b110, 0b101})), (std::vector<std::size_t>{0, 0, 1}));
  EXPECT_EQ(homology(SimplicialComplex::empty_complex(3)), (std::vector<std::size_t>{1}));
  EXPECT_EQ(homology(SimplicialComplex(2, {0b01, 0b10})), (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(homology(SimplicialComplex::void_complex(2)), (std::vector<std::size_t>{0}));
}

TEST(Homology, EulerCharacteristic) {
  for (const SimplicialComplex& c : oracle::complexes(5)) {
    const auto f = c.f_vector();
    const auto h = homology(c);
    std::int64_t chi_f = 0, chi_h = 0;
    for (std::size_t k = 0; k < f.size(); ++k) chi_f += (k % 2 ? 1 : -1) * static_cast<std::int64_t>(f[k]);
    for (std::size_t k = 0; k < h.size(); ++k) chi_h += (k % 2 ? 1 : -1) * static_cast<std::int64_t>(h[k]);
    EXPECT_EQ(chi_f, chi_h);
  }
}

TEST(Homology, RealProjectivePlaneDependsOnCharacteristic) {
  // Six-vertex triangulation of RP^2.
  const std::vector<VarSet> faces{0b000111, 0b001101, 0b011001, 0b110001, 0b100011, 0b010110, 0b011010, 0b101010, 0b101100, 0b110100};
  const SimplicialComplex rp2(6, faces);
  EXPECT_EQ(reduced_homology_dims(rp2, FieldChar(0)), (std::vector<std::size_t>{0, 0, 0, 0}));
  EXPECT_EQ(reduced_homology_dims(rp2, FieldChar(2)), (std::vector<std::size_t>{0, 0, 1, 1}));
}

TEST(Matroid, Examples) {
  EXPECT_TRUE(is_matroid(SimplicialComplex(4, {0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100})));
  EXPECT_FALSE(is_matroid(kFig1Complex));
  EXPECT_TRUE(is_matroid(SimplicialComplex::simplex(4)));
}

TEST(CompleteIntersection, Examples) {
  EXPECT_TRUE(is_complete_intersection(MonomialIdeal(4, {{1, 1, 0, 0}, {0, 0, 1, 1}})));
  EXPECT_FALSE(is_complete_intersection(MonomialIdeal(3, {{1, 1, 0}, {0, 1, 1}})));
  EXPECT_TRUE(is_complete_intersection(MonomialIdeal(3, {{1, 0, 1}})));
}
