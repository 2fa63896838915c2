#pragma once

// Simplicial complexes on the ground set {0..r-1}, the complexes attached to
// monomial ideals, and reduced homology over Q or F_p.
//
// A complex is stored by its facets. The void complex has no faces at all;
// the empty complex {∅} has the single facet ∅. They are different values.

#include <cstdint>
#include <span>
#include <vector>

#include "idealis/linalg.hpp"
#include "idealis/monomial.hpp"
#include "idealis/polyhedra.hpp"

namespace idealis {

inline constexpr std::size_t kMaxComplexGround = 16;

/// Degree in Z^r; negative entries form the co-support.
using MultiDegree = std::vector<std::int64_t>;

VarSet co_support(std::span<const std::int64_t> alpha);

class SimplicialComplex {
 public:
  /// Void complex on an empty ground set.
  SimplicialComplex() = default;
  /// Keeps the inclusion-maximal sets. Throws InvalidArgument for sets outside [r],
  /// Refusal for r > kMaxComplexGround.
  SimplicialComplex(std::size_t ground, std::vector<VarSet> generators);

  static SimplicialComplex void_complex(std::size_t ground);
  static SimplicialComplex empty_complex(std::size_t ground);
  static SimplicialComplex simplex(std::size_t ground);

  std::size_t ground() const { return ground_; }
  /// Sorted by (size, lex).
  const std::vector<VarSet>& facets() const { return facets_; }

  bool is_void() const { return facets_.empty(); }
  bool contains(VarSet face) const;
  /// -2 for the void complex, -1 for {∅}.
  int dim() const;
  /// All faces, sorted by (size, lex).
  std::vector<VarSet> faces() const;
  /// f[k] = number of faces with k elements, k = 0 .. dim + 1.
  std::vector<std::size_t> f_vector() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::size_t ground_ = 0;
  std::vector<VarSet> facets_;
};

/// Delta(I): sets S with prod_{i in S} X_i not in sqrt(I). Throws for the unit ideal.
SimplicialComplex delta_of_ideal(const MonomialIdeal& ideal);
/// Ideal of minimal non-faces; the void complex gives the unit ideal.
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex);

/// Throws InvalidArgument if f is not a face.
SimplicialComplex link(const SimplicialComplex& complex, VarSet f);

/// Faces F of [r] \ CS with X^alpha not in I R_{F u CS}.
SimplicialComplex delta_alpha(const MonomialIdeal& ideal, std::span<const std::int64_t> alpha);
SimplicialComplex delta_alpha(const MembershipTable& table, std::span<const std::int64_t> alpha);

/// Delta_alpha of the integral closure of I^n, from the facets of NP(I); alpha >= 0.
SimplicialComplex delta_alpha_closure(const NewtonPolyhedron& np, int n,
                                      std::span<const std::int64_t> alpha);
/// Delta_alpha of I_D^(n): facets F of D with sum_{i not in F} alpha_i <= n - 1; alpha >= 0.
SimplicialComplex delta_alpha_symbolic(const SimplicialComplex& complex, int n,
                                       std::span<const std::int64_t> alpha);

/// Entry k is dim H~_{k-1}, for k = 0 .. dim + 1. The void complex gives {0}.
std::vector<std::size_t> reduced_homology_dims(const SimplicialComplex& complex, FieldChar field);

bool is_matroid(const SimplicialComplex& complex);
/// Pairwise disjoint generator supports. Throws InvalidArgument unless square-free.
bool is_complete_intersection(const MonomialIdeal& ideal);

}  // namespace idealis
