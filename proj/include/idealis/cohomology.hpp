#pragma once

// Depth and Cohen-Macaulayness of R/J for monomial ideals J.
//
// The main route evaluates dim H^i_m(R/J)_alpha as the reduced homology of
// Delta_alpha(J) in degree i - |CS_alpha| - 1 and searches a finite set of
// representative degrees. depth_koszul_oracle is an unrelated computation
// (multigraded Koszul homology) kept for cross-checking.

#include <optional>
#include <vector>

#include "idealis/linalg.hpp"
#include "idealis/monomial.hpp"
#include "idealis/simplicial.hpp"

namespace idealis {

struct DepthWitness {
  int i = 0;
  MultiDegree alpha;
};

struct DepthReport {
  int depth = 0;
  int dim = 0;
  bool cohen_macaulay = false;
  std::optional<DepthWitness> witness;
  FieldChar field;
};

enum class PowerKind { ordinary, closure, symbolic };

const char* to_string(PowerKind kind);

struct DepthProfile {
  PowerKind kind = PowerKind::ordinary;
  std::vector<DepthReport> entries;  // entries[n - 1]
  /// Smallest s with depth(n) = depth(s) for s <= n <= n_max.
  int observed_dstab = 1;
  /// False when the constant tail is a single entry, i.e. nothing was observed.
  bool resolved = false;
  /// r - l(I), for closure profiles only.
  std::optional<int> limit_hint;

  int n_max() const { return static_cast<int>(entries.size()); }
  const DepthReport& at(int n) const { return entries.at(static_cast<std::size_t>(n - 1)); }
};

/// Throws InvalidArgument for the unit ideal.
DepthReport depth_takayama(const MonomialIdeal& ideal, FieldChar field = {});
int depth_koszul_oracle(const MonomialIdeal& ideal, FieldChar field = {});

/// dim H^i_m(R/J)_alpha.
std::size_t local_cohomology_dim(const MonomialIdeal& ideal, int i, std::span<const std::int64_t> alpha,
                                 FieldChar field = {});

/// Intersection of P_F^n over the facets F of Delta(I), P_F = (X_j : j not in F).
MonomialIdeal symbolic_power(const MonomialIdeal& ideal, int n);

/// The n-th ideal of the family: I^n, the integral closure of I^n, or I^(n).
MonomialIdeal power_of_kind(const MonomialIdeal& ideal, PowerKind kind, int n);

DepthProfile depth_profile(const MonomialIdeal& ideal, PowerKind kind, int n_max, FieldChar field = {});

/// Smallest s such that values[s-1 ..] is constant, 1-based.
int observed_stable_index(std::span<const int> values);

struct StabilityBounds {
  BigInt astab_closure;   // l(l-1)d^(l-2), or 1 when l <= 2
  BigInt astab;           // max(B1, B2)
  BigInt dstab_closure;   // r(r^2-1)r^(r/2)(r-1)^r d^((r-2)(r+1)), or 1 when r <= 2
  BigInt dstab_symbolic;  // r(r+1)bight^(r/2)
};

/// Irrational values are rounded down: each bound b means "index <= b".
/// Throws Refusal when a value would exceed a few million bits.
StabilityBounds stability_bounds(int r, int d, int s, int ell, int bight);

}  // namespace idealis
