#include "idealis/monomial.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>
#include <sstream>

namespace idealis {

namespace {

Exponent checked_add(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_add_overflow(a, b, &out)) throw Error("exponent overflow");
  return out;
}

void require_same_arity(std::size_t a, std::size_t b) {
  if (a != b) {
    throw ArityMismatch("arity mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

int popcount(VarSet s) { return std::popcount(s); }

void require_mask_arity(std::size_t r, std::size_t cap, const char* what) {
  if (r > cap) {
    throw Refusal(std::string(what) + ": arity " + std::to_string(r) + " exceeds cap " +
                  std::to_string(cap));
  }
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {
  for (Exponent e : exps_) {
    if (e < 0) throw InvalidArgument("negative exponent in monomial");
  }
}

Monomial::Monomial(std::initializer_list<Exponent> exponents)
    : Monomial(std::vector<Exponent>(exponents)) {}

Monomial Monomial::one(std::size_t arity) { return Monomial(std::vector<Exponent>(arity, 0)); }

Monomial Monomial::variable(std::size_t arity, std::size_t j) {
  if (j >= arity) throw InvalidArgument("variable index out of range");
  std::vector<Exponent> e(arity, 0);
  e[j] = 1;
  return Monomial(std::move(e));
}

Monomial Monomial::square_free(std::size_t arity, VarSet s) {
  std::vector<Exponent> e(arity, 0);
  for (std::size_t j = 0; j < arity; ++j) e[j] = contains_var(s, j) ? 1 : 0;
  return Monomial(std::move(e));
}

std::int64_t Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::int64_t{0});
}

VarSet Monomial::support() const {
  VarSet s = 0;
  for (std::size_t j = 0; j < exps_.size() && j < 32; ++j) {
    if (exps_[j] > 0) s |= VarSet{1} << j;
  }
  return s;
}

bool Monomial::is_square_free() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& other) const {
  require_same_arity(arity(), other.arity());
  for (std::size_t j = 0; j < exps_.size(); ++j) {
    if (exps_[j] > other.exps_[j]) return false;
  }
  return true;
}

Monomial Monomial::colon(const Monomial& divisor) const {
  require_same_arity(arity(), divisor.arity());
  std::vector<Exponent> e(exps_.size());
  for (std::size_t j = 0; j < e.size(); ++j) e[j] = std::max(exps_[j] - divisor.exps_[j], 0);
  return Monomial(std::move(e));
}

Monomial Monomial::without(VarSet s) const {
  std::vector<Exponent> e = exps_;
  for (std::size_t j = 0; j < e.size() && j < 32; ++j) {
    if (contains_var(s, j)) e[j] = 0;
  }
  return Monomial(std::move(e));
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_arity(a.arity(), b.arity());
  std::vector<Exponent> e(a.arity());
  for (std::size_t j = 0; j < e.size(); ++j) e[j] = checked_add(a.exps_[j], b.exps_[j]);
  return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_arity(a.arity(), b.arity());
  std::vector<Exponent> e(a.arity());
  for (std::size_t j = 0; j < e.size(); ++j) e[j] = std::max(a.exps_[j], b.exps_[j]);
  return Monomial(std::move(e));
}

std::string Monomial::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t j = 0; j < exps_.size(); ++j) {
    if (exps_[j] == 0) continue;
    if (!first) out << '*';
    first = false;
    out << 'x' << (j + 1);
    if (exps_[j] > 1) out << '^' << exps_[j];
  }
  if (first) out << '1';
  return out.str();
}

// ---------------------------------------------------------------------------
// MonomialIdeal

MonomialIdeal::MonomialIdeal(std::size_t arity, std::vector<Monomial> generators)
    : MonomialIdeal(minimalize(arity, std::move(generators))) {}

MonomialIdeal MonomialIdeal::unit(std::size_t arity) {
  MonomialIdeal out(arity);
  out.gens_.push_back(Monomial::one(arity));
  return out;
}

MonomialIdeal MonomialIdeal::prime(std::size_t arity, VarSet s) {
  std::vector<Monomial> gens;
  for (std::size_t j = 0; j < arity; ++j) {
    if (contains_var(s, j)) gens.push_back(Monomial::variable(arity, j));
  }
  return minimalize(arity, std::move(gens));
}

MonomialIdeal MonomialIdeal::from_supports(std::size_t arity, std::span<const VarSet> sets) {
  std::vector<Monomial> gens;
  gens.reserve(sets.size());
  for (VarSet s : sets) {
    if (arity < 32 && (s & ~full_set(arity)) != 0) throw InvalidArgument("support out of range");
    gens.push_back(Monomial::square_free(arity, s));
  }
  return minimalize(arity, std::move(gens));
}

bool MonomialIdeal::is_unit() const { return gens_.size() == 1 && gens_.front().degree() == 0; }

bool MonomialIdeal::is_square_free() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.is_square_free(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  require_same_arity(arity_, m.arity());
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  require_same_arity(arity_, other.arity());
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Monomial& g) { return contains(g); });
}

MaxExponents MonomialIdeal::max_exponents() const {
  MaxExponents out{std::vector<Exponent>(arity_, 0)};
  for (const Monomial& g : gens_) {
    for (std::size_t j = 0; j < arity_; ++j) out.rho[j] = std::max(out.rho[j], g[j]);
  }
  return out;
}

std::int64_t MonomialIdeal::max_degree() const {
  std::int64_t d = 0;
  for (const Monomial& g : gens_) d = std::max(d, g.degree());
  return d;
}

std::string MonomialIdeal::to_string() const {
  if (gens_.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gens_[i].to_string();
  }
  return out + ")";
}

MonomialIdeal minimalize(std::size_t arity, std::vector<Monomial> gens) {
  for (const Monomial& g : gens) require_same_arity(arity, g.arity());
  // A divisor has strictly smaller degree unless equal, so a degree-sorted
  // sweep only needs to compare against already kept generators.
  std::vector<std::pair<std::int64_t, Monomial>> keyed;
  keyed.reserve(gens.size());
  for (Monomial& g : gens) keyed.emplace_back(g.degree(), std::move(g));
  std::sort(keyed.begin(), keyed.end());
  keyed.erase(std::unique(keyed.begin(), keyed.end()), keyed.end());

  std::vector<Monomial> kept;
  for (auto& [deg, g] : keyed) {
    const auto e = g.exponents();
    bool dominated = false;
    for (const Monomial& k : kept) {
      const auto ke = k.exponents();
      bool divides = true;
      for (std::size_t j = 0; j < arity; ++j) {
        if (ke[j] > e[j]) {
          divides = false;
          break;
        }
      }
      if (divides) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end());

  MonomialIdeal out(arity);
  out.gens_ = std::move(kept);
  return out;
}

bool varset_less(VarSet a, VarSet b) {
  const int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  const VarSet diff = a ^ b;
  if (diff == 0) return false;
  return (a & (diff & (~diff + 1U))) != 0;
}

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_arity(a.arity(), b.arity());
  std::vector<Monomial> prods;
  prods.reserve(a.size() * b.size());
  for (const Monomial& u : a.generators()) {
    for (const Monomial& v : b.generators()) prods.push_back(u * v);
  }
  return minimalize(a.arity(), std::move(prods));
}

MonomialIdeal power(const MonomialIdeal& ideal, int n) {
  if (n < 0) throw InvalidArgument("negative power");
  MonomialIdeal out = MonomialIdeal::unit(ideal.arity());
  for (int k = 0; k < n; ++k) out = k == 0 ? ideal : multiply(out, ideal);
  return out;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_arity(a.arity(), b.arity());
  std::vector<Monomial> lcms;
  lcms.reserve(a.size() * b.size());
  for (const Monomial& u : a.generators()) {
    for (const Monomial& v : b.generators()) lcms.push_back(lcm(u, v));
  }
  return minimalize(a.arity(), std::move(lcms));
}

MonomialIdeal quotient(const MonomialIdeal& ideal, const Monomial& m) {
  require_same_arity(ideal.arity(), m.arity());
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const Monomial& g : ideal.generators()) gens.push_back(g.colon(m));
  return minimalize(ideal.arity(), std::move(gens));
}

MonomialIdeal saturate(const MonomialIdeal& ideal, VarSet s) {
  if (s == 0) throw InvalidArgument("saturate: empty variable set");
  const Monomial prod = Monomial::square_free(ideal.arity(), s);
  MonomialIdeal cur = ideal;
  for (;;) {
    MonomialIdeal next = quotient(cur, prod);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

MonomialIdeal saturate_at_prime(const MonomialIdeal& ideal, VarSet s) {
  if (s == 0) throw InvalidArgument("saturate_at_prime: empty variable set");
  // I : (X_j : j in s)^oo = intersection over j in s of I : X_j^oo = I[j].
  std::optional<MonomialIdeal> out;
  for (std::size_t j = 0; j < ideal.arity(); ++j) {
    if (!contains_var(s, j)) continue;
    MonomialIdeal dj = delete_variable(ideal, j);
    out = out ? intersect(*out, dj) : std::move(dj);
  }
  if (!out) throw InvalidArgument("saturate_at_prime: variable set out of range");
  return *out;
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const Monomial& g : ideal.generators()) {
    std::vector<Exponent> e(ideal.arity());
    for (std::size_t j = 0; j < e.size(); ++j) e[j] = g[j] > 0 ? 1 : 0;
    gens.emplace_back(std::move(e));
  }
  return minimalize(ideal.arity(), std::move(gens));
}

MonomialIdeal delete_variable(const MonomialIdeal& ideal, std::size_t j) {
  if (j >= ideal.arity()) throw InvalidArgument("delete_variable: index out of range");
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const Monomial& g : ideal.generators()) {
    std::vector<Exponent> e(g.exponents().begin(), g.exponents().end());
    e[j] = 0;
    gens.emplace_back(std::move(e));
  }
  return minimalize(ideal.arity(), std::move(gens));
}

MonomialIdeal delete_outside(const MonomialIdeal& ideal, VarSet keep) {
  require_mask_arity(ideal.arity(), 32, "delete_outside");
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const Monomial& g : ideal.generators()) gens.push_back(g.without(~keep));
  return minimalize(ideal.arity(), std::move(gens));
}

std::vector<VarSet> radical_supports(const MonomialIdeal& ideal) {
  require_mask_arity(ideal.arity(), 32, "radical_supports");
  std::vector<VarSet> out;
  const MonomialIdeal rad = radical(ideal);
  for (const Monomial& g : rad.generators()) out.push_back(g.support());
  std::sort(out.begin(), out.end(), varset_less);
  return out;
}

std::vector<VarSet> minimal_transversals(std::size_t arity, std::span<const VarSet> sets) {
  require_mask_arity(arity, 24, "minimal_transversals");
  auto hits_all = [&](VarSet t) {
    return std::all_of(sets.begin(), sets.end(), [t](VarSet s) { return (s & t) != 0; });
  };
  std::vector<VarSet> out;
  const VarSet full = full_set(arity);
  for (VarSet t = 0;; ++t) {
    if (hits_all(t)) {
      bool minimal = true;
      for (VarSet rest = t; rest && minimal; rest &= rest - 1) {
        if (hits_all(t & ~(rest & (~rest + 1U)))) minimal = false;
      }
      if (minimal) out.push_back(t);
    }
    if (t == full) break;
  }
  std::sort(out.begin(), out.end(), varset_less);
  return out;
}

int krull_dim(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw InvalidArgument("krull_dim: unit ideal (empty ring)");
  return static_cast<int>(ideal.arity()) - height(ideal);
}

int height(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw InvalidArgument("height: unit ideal");
  const std::vector<VarSet> sets = radical_supports(ideal);
  if (sets.empty()) return 0;
  // minimal_transversals is sorted by size, so the first is a smallest one.
  return std::popcount(minimal_transversals(ideal.arity(), sets).front());
}

int big_height(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw InvalidArgument("big_height: unit ideal");
  const std::vector<VarSet> sets = radical_supports(ideal);
  if (sets.empty()) return 0;
  return std::popcount(minimal_transversals(ideal.arity(), sets).back());
}

// ---------------------------------------------------------------------------
// MembershipTable

MembershipTable::MembershipTable(const MonomialIdeal& ideal)
    : words_((ideal.size() + 63) / 64),
      rho_(ideal.max_exponents().rho),
      all_(words_, 0),
      none_(words_, 0),
      table_(ideal.arity()) {
  const auto& gens = ideal.generators();
  for (std::size_t g = 0; g < gens.size(); ++g) all_[g / 64] |= std::uint64_t{1} << (g % 64);
  for (std::size_t j = 0; j < rho_.size(); ++j) {
    auto& t = table_[j];
    t.assign(static_cast<std::size_t>(rho_[j] + 1) * words_, 0);
    for (std::size_t g = 0; g < gens.size(); ++g) {
      for (Exponent a = gens[g][j]; a <= rho_[j]; ++a) {
        t[static_cast<std::size_t>(a) * words_ + g / 64] |= std::uint64_t{1} << (g % 64);
      }
    }
  }
}

const std::uint64_t* MembershipTable::passing(std::size_t j, std::int64_t a) const {
  if (a < 0) return none_.data();
  if (a >= rho_[j]) return all_.data();
  return table_[j].data() + static_cast<std::size_t>(a) * words_;
}

bool MembershipTable::contains(std::span<const Exponent> exps) const {
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t acc = all_[w];
    for (std::size_t j = 0; j < rho_.size() && acc; ++j) acc &= passing(j, exps[j])[w];
    if (acc) return true;
  }
  return false;
}

}  // namespace idealis
