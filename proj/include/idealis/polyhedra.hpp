#pragma once

// Newton polyhedra of monomial ideals in exact integer arithmetic.
//
// NP(I) = conv(E(G(I))) + R_+^r is stored by its facet inequalities
// <a, x> >= b with a in N^r \ {0}, b in N and gcd(a, b) = 1. Every facet
// passes through s affinely independent generator points, where s is the
// number of nonzero entries of a, and is parallel to the remaining r - s
// coordinate axes; facets are enumerated from exactly that structure.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "idealis/monomial.hpp"

namespace idealis {

using IntVector = std::vector<std::int64_t>;

struct Facet {
  IntVector normal;
  std::int64_t offset = 0;

  VarSet support() const;
  std::int64_t evaluate(std::span<const std::int64_t> x) const;

  friend auto operator<=>(const Facet&, const Facet&) = default;
};

class NewtonPolyhedron {
 public:
  NewtonPolyhedron() = default;
  NewtonPolyhedron(std::size_t arity, std::vector<Facet> facets);

  std::size_t arity() const { return arity_; }
  const std::vector<Facet>& facets() const { return facets_; }

  friend bool operator==(const NewtonPolyhedron&, const NewtonPolyhedron&) = default;

 private:
  std::size_t arity_ = 0;
  std::vector<Facet> facets_;  // sorted
};

/// Throws InvalidArgument for the zero and unit ideals.
NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal);

/// x in n * NP(I): x >= 0 and <a_j, x> >= n b_j for every facet.
bool np_contains(const NewtonPolyhedron& np, int n, std::span<const std::int64_t> x);

/// Minimal generators of the integral closure of I^n, i.e. of n*NP(I) cap N^r.
MonomialIdeal integral_closure_power(const MonomialIdeal& ideal, int n);
MonomialIdeal integral_closure_power(const MonomialIdeal& ideal, const NewtonPolyhedron& np, int n);

/// l(I) = max{dim F + 1 : F a compact face of NP(I)}.
int analytic_spread(const MonomialIdeal& ideal);
int analytic_spread(const MonomialIdeal& ideal, const NewtonPolyhedron& np);

/// Lattice region {x >= 0 : <a, x> < c for strict, <a, x> >= c for weak}.
struct MixedRegion {
  struct Constraint {
    IntVector normal;
    std::int64_t bound = 0;
  };
  std::size_t arity = 0;
  std::vector<Constraint> strict;
  std::vector<Constraint> weak;

  bool contains(std::span<const std::int64_t> x) const;
};

/// C_n for the facet pattern of beta at level m: facets violated by beta
/// against m*b become strict constraints at level n, the rest weak ones.
MixedRegion mixed_region(const NewtonPolyhedron& np, int m, std::span<const std::int64_t> beta,
                         int n);

/// Searches [0, box]^r in lexicographic order. An empty result only means
/// "no lattice point up to the box", never infeasibility.
std::optional<IntVector> region_has_lattice_point(const MixedRegion& region, std::int64_t box);

}  // namespace idealis
