#pragma once

// Monomials, monomial ideals and their arithmetic.
//
// A monomial X^a in K[X_1..X_r] is stored as its exponent vector a in N^r.
// A monomial ideal is stored as its minimal generating antichain, sorted
// lexicographically, so two ideals are equal iff their representations are.
// Variable indices are 0-based throughout the C++ API.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "idealis/error.hpp"

namespace idealis {

using Exponent = std::int32_t;

/// Subset of variables {0..r-1} as a bit mask. Mask-based routines cap r.
using VarSet = std::uint32_t;

inline constexpr std::size_t kMaxMaskArity = 30;

inline constexpr bool contains_var(VarSet s, std::size_t j) { return (s >> j) & 1U; }
inline constexpr VarSet full_set(std::size_t r) {
  return r >= 32 ? ~VarSet{0} : static_cast<VarSet>((VarSet{1} << r) - 1U);
}
int popcount(VarSet s);

/// Total order on variable subsets: by size, then lexicographically on the
/// sorted index lists.
bool varset_less(VarSet a, VarSet b);

/// Throws Refusal when r is too large for a 2^r sweep.
void require_mask_arity(std::size_t r, std::size_t cap, const char* what);

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exponents);
  Monomial(std::initializer_list<Exponent> exponents);

  static Monomial one(std::size_t arity);
  static Monomial variable(std::size_t arity, std::size_t j);
  /// Product of the variables in s.
  static Monomial square_free(std::size_t arity, VarSet s);

  std::size_t arity() const { return exps_.size(); }
  Exponent operator[](std::size_t j) const { return exps_[j]; }
  std::span<const Exponent> exponents() const { return exps_; }

  std::int64_t degree() const;
  VarSet support() const;
  bool is_square_free() const;
  bool divides(const Monomial& other) const;

  /// Exponent-wise max(a - b, 0); the generator of (X^a) : X^b.
  Monomial colon(const Monomial& divisor) const;
  /// Same monomial with the exponents of the variables in s set to zero.
  Monomial without(VarSet s) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return a.exps_ <=> b.exps_;
  }

  /// "x1^2*x3", or "1".
  std::string to_string() const;

 private:
  std::vector<Exponent> exps_;
};

/// rho_j = largest exponent of X_j among the minimal generators.
struct MaxExponents {
  std::vector<Exponent> rho;
};

class MonomialIdeal {
 public:
  /// The zero ideal of K[X_1..X_arity].
  explicit MonomialIdeal(std::size_t arity = 0) : arity_(arity) {}
  /// Minimalizes the given generators. Throws ArityMismatch.
  MonomialIdeal(std::size_t arity, std::vector<Monomial> generators);

  static MonomialIdeal zero(std::size_t arity) { return MonomialIdeal(arity); }
  static MonomialIdeal unit(std::size_t arity);
  /// The prime ideal generated by the variables in s.
  static MonomialIdeal prime(std::size_t arity, VarSet s);
  static MonomialIdeal maximal(std::size_t arity) { return prime(arity, full_set(arity)); }
  /// Square-free ideal generated by the products over each set.
  static MonomialIdeal from_supports(std::size_t arity, std::span<const VarSet> sets);

  std::size_t arity() const { return arity_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  bool is_proper() const { return !is_unit(); }
  bool is_square_free() const;
  bool contains(const Monomial& m) const;
  bool contains(const MonomialIdeal& other) const;

  MaxExponents max_exponents() const;
  /// d(I): the largest total degree of a minimal generator (0 for the zero ideal).
  std::int64_t max_degree() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

  std::string to_string() const;

 private:
  friend MonomialIdeal minimalize(std::size_t arity, std::vector<Monomial> gens);

  std::size_t arity_ = 0;
  std::vector<Monomial> gens_;
};

/// Divisibility-minimal antichain generating the same ideal, lex-sorted.
MonomialIdeal minimalize(std::size_t arity, std::vector<Monomial> gens);

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b);
/// I^n by iterated products; power(I, 0) is the unit ideal.
MonomialIdeal power(const MonomialIdeal& ideal, int n);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal quotient(const MonomialIdeal& ideal, const Monomial& m);
/// I : (prod_{j in s} X_j)^infinity.
MonomialIdeal saturate(const MonomialIdeal& ideal, VarSet s);
/// I : P_s^infinity for the prime P_s = (X_j : j in s).
MonomialIdeal saturate_at_prime(const MonomialIdeal& ideal, VarSet s);
MonomialIdeal radical(const MonomialIdeal& ideal);
/// I[j]: sets X_j = 1 in every generator (arity kept).
MonomialIdeal delete_variable(const MonomialIdeal& ideal, std::size_t j);
/// Sets X_j = 1 for every j outside keep.
MonomialIdeal delete_outside(const MonomialIdeal& ideal, VarSet keep);

/// Supports of the minimal generators of the radical (the minimal non-faces of Delta(I)).
std::vector<VarSet> radical_supports(const MonomialIdeal& ideal);
/// All inclusion-minimal sets meeting every given set, sorted by (size, lex).
std::vector<VarSet> minimal_transversals(std::size_t arity, std::span<const VarSet> sets);

/// dim R/I. Throws InvalidArgument for the unit ideal.
int krull_dim(const MonomialIdeal& ideal);
/// ht I = r - dim R/I.
int height(const MonomialIdeal& ideal);
/// Largest size of a minimal prime.
int big_height(const MonomialIdeal& ideal);

/// Bit-set index for fast membership tests X^a in I R_G.
///
/// passing(j, a) is the set of generators whose j-th exponent is <= a. X^a lies
/// in I R_G (G the inverted variables) iff the intersection of passing(j, a_j)
/// over j outside G is nonempty.
class MembershipTable {
 public:
  explicit MembershipTable(const MonomialIdeal& ideal);

  std::size_t words() const { return words_; }
  std::size_t arity() const { return rho_.size(); }
  Exponent rho(std::size_t j) const { return rho_[j]; }
  const std::uint64_t* all() const { return all_.data(); }
  /// Values a >= rho(j) all map to the full set; negative values to the empty set.
  const std::uint64_t* passing(std::size_t j, std::int64_t a) const;

  bool contains(std::span<const Exponent> exps) const;

 private:
  std::size_t words_ = 0;
  std::vector<Exponent> rho_;
  std::vector<std::uint64_t> all_;
  std::vector<std::uint64_t> none_;
  std::vector<std::vector<std::uint64_t>> table_;  // per variable, (rho_j + 1) * words_
};

}  // namespace idealis
