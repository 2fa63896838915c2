#pragma once

// Associated primes of R/J for monomial J. Every associated prime is
// generated by variables, so a prime is stored as the set S of its variables.

#include <optional>
#include <string>
#include <vector>

#include "idealis/cohomology.hpp"
#include "idealis/monomial.hpp"

namespace idealis {

class PrimeSet {
 public:
  PrimeSet() = default;
  /// Sorts by (size, lex) and removes duplicates.
  PrimeSet(std::size_t arity, std::vector<VarSet> primes);

  std::size_t arity() const { return arity_; }
  const std::vector<VarSet>& primes() const { return primes_; }
  std::size_t size() const { return primes_.size(); }
  bool contains(VarSet p) const;
  bool contains_maximal() const { return contains(full_set(arity_)); }
  bool is_subset_of(const PrimeSet& other) const;

  /// "x4;x1,x2;x2,x3", 1-based; "-" when empty.
  std::string to_string() const;

  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;

 private:
  std::size_t arity_ = 0;
  std::vector<VarSet> primes_;
};

/// "x1,x2" for {0, 1}.
std::string prime_to_string(VarSet p);

/// Throws InvalidArgument for the zero and unit ideals.
PrimeSet ass(const MonomialIdeal& ideal);
/// Primes P_S = (J : X^gamma) over gamma in prod [0, box_j]; a test oracle.
PrimeSet ass_witness_oracle(const MonomialIdeal& ideal, const MaxExponents& box);
PrimeSet min_primes(const MonomialIdeal& ideal);

struct AssProfile {
  PowerKind kind = PowerKind::ordinary;
  std::vector<PrimeSet> entries;  // entries[n - 1]
  int observed_astab = 1;
  bool resolved = false;
  PrimeSet min_primes;

  int n_max() const { return static_cast<int>(entries.size()); }
  const PrimeSet& at(int n) const { return entries.at(static_cast<std::size_t>(n - 1)); }
  /// entries(n) minus the minimal primes.
  PrimeSet embedded(int n) const;
};

AssProfile ass_profile(const MonomialIdeal& ideal, PowerKind kind, int n_max);

struct PersistenceResult {
  bool ok = true;
  int n = 0;        // first n with entries(n) not inside entries(n + 1)
  VarSet prime = 0;  // a prime of entries(n) missing from entries(n + 1)
};

PersistenceResult persistence_check(const AssProfile& profile);

}  // namespace idealis
