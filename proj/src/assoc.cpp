#include "idealis/assoc.hpp"

#include <algorithm>

#include "idealis/parallel.hpp"

namespace idealis {

namespace {

void require_proper_nonzero(const MonomialIdeal& ideal, const char* what) {
  if (ideal.is_zero() || ideal.is_unit()) {
    throw InvalidArgument(std::string(what) + ": ideal must be proper and nonzero");
  }
}

// Whether K[X_S]/J_S has a nonzero socle, J_S living in the variables S.
bool has_socle(const MonomialIdeal& local, VarSet s) {
  const std::size_t r = local.arity();
  const MembershipTable table(local);
  std::vector<std::size_t> vars;
  for (std::size_t j = 0; j < r; ++j) {
    if (!contains_var(s, j)) continue;
    if (table.rho(j) == 0) return false;  // X_j is a nonzerodivisor
    vars.push_back(j);
  }
  // A socle monomial has m_j < rho_j: otherwise X_j m in J_S forces m in J_S.
  std::vector<Exponent> m(r, 0);
  for (;;) {
    if (!table.contains(m)) {
      bool socle = true;
      for (std::size_t j : vars) {
        ++m[j];
        socle = table.contains(m);
        --m[j];
        if (!socle) break;
      }
      if (socle) return true;
    }
    std::size_t i = vars.size();
    while (i > 0 && m[vars[i - 1]] + 1 == table.rho(vars[i - 1])) m[vars[--i]] = 0;
    if (i == 0) return false;
    ++m[vars[i - 1]];
  }
}

}  // namespace

PrimeSet::PrimeSet(std::size_t arity, std::vector<VarSet> primes) : arity_(arity), primes_(std::move(primes)) {
  std::sort(primes_.begin(), primes_.end(), varset_less);
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
}

bool PrimeSet::contains(VarSet p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p, varset_less);
}

bool PrimeSet::is_subset_of(const PrimeSet& other) const {
  return std::all_of(primes_.begin(), primes_.end(), [&](VarSet p) { return other.contains(p); });
}

std::string prime_to_string(VarSet p) {
  std::string out;
  for (std::size_t j = 0; j < 32 && (p >> j) != 0; ++j) {
    if (!contains_var(p, j)) continue;
    if (!out.empty()) out += ',';
    out += 'x' + std::to_string(j + 1);
  }
  return out;
}

std::string PrimeSet::to_string() const {
  if (primes_.empty()) return "-";
  std::string out;
  for (VarSet p : primes_) {
    if (!out.empty()) out += ';';
    out += prime_to_string(p);
  }
  return out;
}

PrimeSet ass(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal, "ass");
  const std::size_t r = ideal.arity();
  require_mask_arity(r, 20, "ass");
  std::vector<VarSet> found;
  // P_S is associated iff the maximal ideal of K[X_S] is associated to the
  // localization J_S (variables outside S set to 1).
  for (VarSet s = 1; s <= full_set(r); ++s) {
    const MonomialIdeal local = delete_outside(ideal, s);
    if (local.is_unit()) continue;
    if (has_socle(local, s)) found.push_back(s);
  }
  return PrimeSet(r, std::move(found));
}

PrimeSet ass_witness_oracle(const MonomialIdeal& ideal, const MaxExponents& box) {
  require_proper_nonzero(ideal, "ass_witness_oracle");
  const std::size_t r = ideal.arity();
  if (box.rho.size() != r) throw ArityMismatch("ass_witness_oracle: box has wrong length");
  std::vector<VarSet> found;
  std::vector<Exponent> g(r, 0);
  for (;;) {
    const Monomial m(g);
    if (!ideal.contains(m)) {
      const MonomialIdeal q = quotient(ideal, m);
      const auto& gens = q.generators();
      if (std::all_of(gens.begin(), gens.end(), [](const Monomial& u) { return u.degree() == 1; })) {
        VarSet p = 0;
        for (const Monomial& u : gens) p |= u.support();
        found.push_back(p);
      }
    }
    std::size_t j = r;
    while (j > 0 && g[j - 1] == box.rho[j - 1]) g[--j] = 0;
    if (j == 0) break;
    ++g[j - 1];
  }
  return PrimeSet(r, std::move(found));
}

PrimeSet min_primes(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal, "min_primes");
  const std::vector<VarSet> supports = radical_supports(ideal);
  return PrimeSet(ideal.arity(), minimal_transversals(ideal.arity(), supports));
}

PrimeSet AssProfile::embedded(int n) const {
  std::vector<VarSet> out;
  for (VarSet p : at(n).primes()) {
    if (!min_primes.contains(p)) out.push_back(p);
  }
  return PrimeSet(min_primes.arity(), std::move(out));
}

AssProfile ass_profile(const MonomialIdeal& ideal, PowerKind kind, int n_max) {
  require_proper_nonzero(ideal, "ass_profile");
  if (n_max < 1) throw InvalidArgument("ass_profile: n_max must be positive");
  AssProfile out;
  out.kind = kind;
  out.min_primes = min_primes(ideal);
  out.entries.resize(static_cast<std::size_t>(n_max));

  std::optional<NewtonPolyhedron> np;
  if (kind == PowerKind::closure) np = newton_polyhedron(ideal);
  parallel_for(static_cast<std::size_t>(n_max), [&](std::size_t i) {
    const int n = static_cast<int>(i) + 1;
    out.entries[i] = ass(np ? integral_closure_power(ideal, *np, n) : power_of_kind(ideal, kind, n));
  });

  std::size_t s = out.entries.size();
  while (s > 1 && out.entries[s - 2] == out.entries.back()) --s;
  out.observed_astab = static_cast<int>(s);
  out.resolved = out.observed_astab < n_max;
  return out;
}

PersistenceResult persistence_check(const AssProfile& profile) {
  for (int n = 1; n < profile.n_max(); ++n) {
    for (VarSet p : profile.at(n).primes()) {
      if (!profile.at(n + 1).contains(p)) return {false, n, p};
    }
  }
  return {};
}

}  // namespace idealis
