#include <gtest/gtest.h>

#include <random>

#include "idealis/combinat.hpp"
#include "idealis/error.hpp"
#include "idealis/monomial.hpp"
#include "oracles.hpp"

using namespace idealis;

namespace {

MonomialIdeal ideal(std::size_t r, std::vector<Monomial> gens) { return MonomialIdeal(r, std::move(gens)); }

const MonomialIdeal kFig1 = ideal(4, {{2, 0, 3, 1}, {0, 3, 0, 2}});

}  // namespace

TEST(Minimalize, DropsMultiples) {
  EXPECT_EQ(ideal(2, {{2, 0}, {3, 1}, {0, 1}}).generators(), (std::vector<Monomial>{{0, 1}, {2, 0}}));
  EXPECT_TRUE(ideal(2, {}).is_zero());
  const auto big = ideal(2, {{1, 4}, {2, 3}, {3, 2}, {5, 1}, {4, 2}});
  EXPECT_EQ(big.size(), 4u);
  EXPECT_FALSE(big.contains(Monomial{4, 1}));
  EXPECT_TRUE(big.contains(Monomial{4, 2}));
}

TEST(Minimalize, ArityMismatchThrows) {
  EXPECT_THROW(ideal(2, {{1, 0, 0}}), ArityMismatch);
}

TEST(Arithmetic, Products) {
  const auto x = MonomialIdeal::prime(2, 0b01), y = MonomialIdeal::prime(2, 0b10), m = MonomialIdeal::maximal(2);
  EXPECT_EQ(multiply(x, y), ideal(2, {{1, 1}}));
  EXPECT_EQ(multiply(m, m), ideal(2, {{2, 0}, {1, 1}, {0, 2}}));
  EXPECT_TRUE(multiply(MonomialIdeal::zero(2), m).is_zero());
  EXPECT_EQ(power(m, 2), ideal(2, {{2, 0}, {1, 1}, {0, 2}}));
  EXPECT_EQ(power(ideal(1, {{2}}), 3), ideal(1, {{6}}));
}

TEST(Arithmetic, SquareOfFourCycle) {
  // Ten products of pairs of edges, but x1x2*x3x4 = x2x3*x1x4.
  const MonomialIdeal c4 = edge_ideal(Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
  EXPECT_EQ(oracle::expand_power(c4.generators(), 2).size(), 9u);
  EXPECT_EQ(power(c4, 2).size(), 9u);
}

TEST(Arithmetic, PowerMatchesExpansion) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 60; ++t) {
    const auto i = oracle::random_ideal(rng, 3, 4, 3);
    for (int n = 1; n <= 3; ++n) {
      EXPECT_EQ(power(i, n), MonomialIdeal(3, oracle::expand_power(i.generators(), n))) << i.to_string();
    }
  }
}

TEST(Arithmetic, Intersections) {
  const auto x = ideal(2, {{1, 0}}), y = ideal(2, {{0, 1}});
  EXPECT_EQ(intersect(x, y), ideal(2, {{1, 1}}));
  EXPECT_EQ(intersect(ideal(2, {{2, 0}, {0, 1}}), x), ideal(2, {{2, 0}, {1, 1}}));
  EXPECT_EQ(intersect(kFig1, MonomialIdeal::unit(4)), kFig1);
}

TEST(Arithmetic, IntersectionMatchesBruteMembership) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 60; ++t) {
    const auto a = oracle::random_ideal(rng, 3, 3, 3), b = oracle::random_ideal(rng, 3, 3, 3);
    const auto c = intersect(a, b);
    for (std::int64_t i = 0; i <= 4; ++i)
      for (std::int64_t j = 0; j <= 4; ++j)
        for (std::int64_t k = 0; k <= 4; ++k) {
          const oracle::Point p{i, j, k};
          EXPECT_EQ(oracle::member(c.generators(), p),
                    oracle::member(a.generators(), p) && oracle::member(b.generators(), p));
        }
  }
}

TEST(Arithmetic, Quotients) {
  EXPECT_EQ(quotient(ideal(2, {{2, 0}, {1, 1}}), Monomial{1, 0}), ideal(2, {{1, 0}, {0, 1}}));
  EXPECT_EQ(quotient(kFig1, Monomial::one(4)), kFig1);
  EXPECT_EQ(quotient(ideal(4, {{1, 0, 1, 1}, {0, 1, 0, 1}}), Monomial{0, 0, 0, 1}),
            ideal(4, {{1, 0, 1, 0}, {0, 1, 0, 0}}));
}

TEST(Arithmetic, Saturation) {
  EXPECT_EQ(saturate_at_prime(ideal(2, {{2, 0}, {1, 1}}), 0b11), ideal(2, {{1, 0}}));
  EXPECT_TRUE(saturate(ideal(2, {{2, 0}, {1, 1}}), 0b11).is_unit());
  EXPECT_EQ(saturate_at_prime(ideal(3, {{1, 0, 0}}), 0b110), ideal(3, {{1, 0, 0}}));
  EXPECT_TRUE(saturate(ideal(2, {{1, 0}}), 0b11).is_unit());
  EXPECT_TRUE(saturate(MonomialIdeal::unit(3), 0b101).is_unit());
}

TEST(Radical, Examples) {
  EXPECT_EQ(radical(kFig1), ideal(4, {{1, 0, 1, 1}, {0, 1, 0, 1}}));
  const auto sf = ideal(3, {{1, 1, 0}, {0, 1, 1}});
  EXPECT_EQ(radical(sf), sf);
  EXPECT_EQ(radical(ideal(3, {{2, 1, 0}, {1, 0, 2}})), ideal(3, {{1, 1, 0}, {1, 0, 1}}));
}

TEST(Radical, PowerLandsInIdeal) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 80; ++t) {
    const auto i = oracle::random_ideal(rng, 3, 4, 3);
    const auto rad = radical(i);
    EXPECT_TRUE(rad.is_square_free());
    for (const Monomial& g : rad.generators()) {
      std::vector<Exponent> e(g.exponents().begin(), g.exponents().end());
      for (auto& x : e) x *= 3;
      EXPECT_TRUE(i.contains(Monomial(e)));
    }
    for (const Monomial& g : i.generators()) EXPECT_TRUE(rad.contains(g));
  }
}

TEST(Delete, Variable) {
  EXPECT_EQ(delete_variable(kFig1, 3), ideal(4, {{2, 0, 3, 0}, {0, 3, 0, 0}}));
  EXPECT_TRUE(delete_variable(ideal(2, {{2, 0}}), 0).is_unit());
  const auto a = delete_variable(delete_variable(kFig1, 0), 2), b = delete_variable(delete_variable(kFig1, 2), 0);
  EXPECT_EQ(a, b);
}

TEST(Dimension, Examples) {
  EXPECT_EQ(krull_dim(kFig1), 3);
  EXPECT_EQ(krull_dim(MonomialIdeal::maximal(3)), 0);
  EXPECT_EQ(krull_dim(MonomialIdeal::zero(5)), 5);
  EXPECT_EQ(height(kFig1), 1);
  EXPECT_EQ(big_height(kFig1), 2);
}

TEST(Membership, TableMatchesDivisibility) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 40; ++t) {
    const auto i = oracle::random_ideal(rng, 3, 5, 3);
    const MembershipTable table(i);
    for (std::int32_t a = 0; a <= 4; ++a)
      for (std::int32_t b = 0; b <= 4; ++b)
        for (std::int32_t c = 0; c <= 4; ++c) {
          const std::vector<Exponent> e{a, b, c};
          EXPECT_EQ(table.contains(e), i.contains(Monomial(e)));
        }
  }
}

TEST(Exponent, OverflowIsRejected) {
  const auto big = ideal(1, {{1 << 20}});
  EXPECT_THROW(power(big, 4096), Error);
}
