#include "idealis/cohomology.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cmath>
#include <map>

#include "idealis/parallel.hpp"
#include "idealis/polyhedra.hpp"

namespace idealis {

namespace {

using Homology = std::vector<std::size_t>;

bool is_cone(const SimplicialComplex& d) {
  if (d.is_void()) return false;
  VarSet common = full_set(d.ground());
  for (VarSet f : d.facets()) common &= f;
  return common != 0;
}

class HomologyCache {
 public:
  explicit HomologyCache(FieldChar field) : field_(field) {}

  const Homology& get(const SimplicialComplex& d) {
    auto it = memo_.find(d.facets());
    if (it != memo_.end()) return it->second;
    Homology h;
    if (d.is_void() || is_cone(d)) {
      h.assign(1, 0);
    } else {
      h = reduced_homology_dims(d, field_);
    }
    return memo_.emplace(d.facets(), std::move(h)).first->second;
  }

 private:
  FieldChar field_;
  std::map<std::vector<VarSet>, Homology> memo_;
};

// Values of alpha_j that represent every class of X_j-exponents with the same
// membership behaviour below rho_j. Degrees with alpha_j >= rho_j make
// Delta_alpha a cone over j (or void), so they never carry homology.
std::vector<std::vector<std::int64_t>> representatives(const MonomialIdeal& ideal) {
  const std::size_t r = ideal.arity();
  const MaxExponents rho = ideal.max_exponents();
  std::vector<std::vector<std::int64_t>> reps(r);
  for (std::size_t j = 0; j < r; ++j) {
    if (rho.rho[j] == 0) continue;
    reps[j].push_back(0);
    for (const Monomial& g : ideal.generators()) {
      if (g[j] < rho.rho[j]) reps[j].push_back(g[j]);
    }
    std::sort(reps[j].begin(), reps[j].end());
    reps[j].erase(std::unique(reps[j].begin(), reps[j].end()), reps[j].end());
  }
  return reps;
}

BigInt big_pow(std::int64_t base, std::int64_t e) {
  BigInt out = 1, b = base;
  while (e > 0) {
    if (e & 1) out *= b;
    b *= b;
    e >>= 1;
  }
  return out;
}

}  // namespace

const char* to_string(PowerKind kind) {
  switch (kind) {
    case PowerKind::ordinary: return "ordinary";
    case PowerKind::closure: return "closure";
    case PowerKind::symbolic: return "symbolic";
  }
  return "?";
}

DepthReport depth_takayama(const MonomialIdeal& ideal, FieldChar field) {
  if (ideal.is_unit()) throw InvalidArgument("depth_takayama: unit ideal");
  const std::size_t r = ideal.arity();
  require_mask_arity(r, kMaxComplexGround, "depth_takayama");

  DepthReport report;
  report.field = field;
  report.dim = krull_dim(ideal);

  const MembershipTable table(ideal);
  const auto reps = representatives(ideal);
  HomologyCache cache(field);

  int best = INT_MAX;
  for (VarSet cs : delta_of_ideal(ideal).faces()) {
    const int c = std::popcount(cs);
    if (c >= best) break;
    std::vector<std::size_t> free_vars;
    bool empty_range = false;
    for (std::size_t j = 0; j < r; ++j) {
      if (contains_var(cs, j)) continue;
      free_vars.push_back(j);
      empty_range |= reps[j].empty();
    }
    if (empty_range) continue;

    MultiDegree alpha(r, -1);
    std::vector<std::size_t> pos(free_vars.size(), 0);
    for (std::size_t j : free_vars) alpha[j] = reps[j][0];
    for (;;) {
      const Homology& h = cache.get(delta_alpha(table, alpha));
      const std::size_t limit = std::min<std::size_t>(h.size(), static_cast<std::size_t>(best - c));
      for (std::size_t k = 0; k < limit; ++k) {
        if (h[k] != 0) {
          best = static_cast<int>(k) + c;
          report.witness = DepthWitness{best, alpha};
          break;
        }
      }
      if (best <= c) break;
      // Odometer, first free variable most significant.
      std::size_t i = free_vars.size();
      while (i > 0 && pos[i - 1] + 1 == reps[free_vars[i - 1]].size()) {
        pos[i - 1] = 0;
        alpha[free_vars[i - 1]] = reps[free_vars[i - 1]][0];
        --i;
      }
      if (i == 0) break;
      ++pos[i - 1];
      alpha[free_vars[i - 1]] = reps[free_vars[i - 1]][pos[i - 1]];
    }
    if (best == 0) break;
  }
  if (best == INT_MAX) throw Error("depth_takayama: no nonvanishing local cohomology found");
  report.depth = best;
  report.cohen_macaulay = report.depth == report.dim;
  return report;
}

std::size_t local_cohomology_dim(const MonomialIdeal& ideal, int i, std::span<const std::int64_t> alpha,
                                 FieldChar field) {
  const int k = i - std::popcount(co_support(alpha));
  if (k < 0) return 0;
  const Homology h = reduced_homology_dims(delta_alpha(ideal, alpha), field);
  return static_cast<std::size_t>(k) < h.size() ? h[static_cast<std::size_t>(k)] : 0;
}

int depth_koszul_oracle(const MonomialIdeal& ideal, FieldChar field) {
  if (ideal.is_unit()) throw InvalidArgument("depth_koszul_oracle: unit ideal");
  const std::size_t r = ideal.arity();
  require_mask_arity(r, kMaxComplexGround, "depth_koszul_oracle");
  const MaxExponents rho = ideal.max_exponents();
  const auto& gens = ideal.generators();
  auto in_ideal = [&](const std::vector<Exponent>& v) {
    return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) {
      for (std::size_t j = 0; j < r; ++j) {
        if (g[j] > v[j]) return false;
      }
      return true;
    });
  };

  // Strand of the Koszul complex K(X; R/J) in multidegree b: basis e_T for
  // T in supp(b) with X^(b - e_T) nonzero in R/J.
  int pd = 0;
  std::vector<Exponent> b(r, 0), v(r);
  for (;;) {
    VarSet supp = 0;
    for (std::size_t j = 0; j < r; ++j) {
      if (b[j] > 0) supp |= VarSet{1} << j;
    }
    std::vector<std::vector<VarSet>> basis(static_cast<std::size_t>(std::popcount(supp)) + 1);
    std::map<VarSet, std::size_t> index;
    for (VarSet t = supp;; t = (t - 1) & supp) {
      for (std::size_t j = 0; j < r; ++j) v[j] = b[j] - (contains_var(t, j) ? 1 : 0);
      if (!in_ideal(v)) {
        auto& layer = basis[static_cast<std::size_t>(std::popcount(t))];
        index[t] = layer.size();
        layer.push_back(t);
      }
      if (t == 0) break;
    }
    std::vector<std::size_t> rk(basis.size() + 1, 0);
    for (std::size_t i = 1; i < basis.size(); ++i) {
      if (basis[i].empty() || basis[i - 1].empty()) continue;
      IntMatrix d(basis[i].size(), basis[i - 1].size());
      for (std::size_t row = 0; row < basis[i].size(); ++row) {
        const VarSet t = basis[i][row];
        int sign = 1;
        for (VarSet rest = t; rest; rest &= rest - 1) {
          const VarSet low = rest & (~rest + 1U);
          auto it = index.find(t & ~low);
          if (it != index.end()) d(row, it->second) = sign;
          sign = -sign;
        }
      }
      rk[i] = rank(d, field);
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i].size() > rk[i] + rk[i + 1]) pd = std::max(pd, static_cast<int>(i));
    }

    std::size_t j = r;
    while (j > 0 && b[j - 1] == rho.rho[j - 1]) b[--j] = 0;
    if (j == 0) break;
    ++b[j - 1];
  }
  return static_cast<int>(r) - pd;
}

MonomialIdeal symbolic_power(const MonomialIdeal& ideal, int n) {
  if (!ideal.is_square_free()) throw InvalidArgument("symbolic_power: ideal is not square-free");
  if (n < 1) throw InvalidArgument("symbolic_power: n must be positive");
  const std::size_t r = ideal.arity();
  if (ideal.is_unit()) return ideal;
  std::optional<MonomialIdeal> acc;
  const SimplicialComplex delta = delta_of_ideal(ideal);
  for (VarSet f : delta.facets()) {
    MonomialIdeal p = power(MonomialIdeal::prime(r, full_set(r) & ~f), n);
    acc = acc ? intersect(*acc, p) : std::move(p);
  }
  return *acc;
}

MonomialIdeal power_of_kind(const MonomialIdeal& ideal, PowerKind kind, int n) {
  switch (kind) {
    case PowerKind::ordinary: return power(ideal, n);
    case PowerKind::closure:
      if (ideal.is_zero() || ideal.is_unit()) return ideal;
      return integral_closure_power(ideal, n);
    case PowerKind::symbolic: return symbolic_power(ideal, n);
  }
  throw InvalidArgument("unknown power kind");
}

int observed_stable_index(std::span<const int> values) {
  std::size_t s = values.size();
  while (s > 1 && values[s - 2] == values.back()) --s;
  return static_cast<int>(std::max<std::size_t>(s, 1));
}

DepthProfile depth_profile(const MonomialIdeal& ideal, PowerKind kind, int n_max, FieldChar field) {
  if (n_max < 1) throw InvalidArgument("depth_profile: n_max must be positive");
  if (ideal.is_unit()) throw InvalidArgument("depth_profile: unit ideal");
  if (kind == PowerKind::symbolic && !ideal.is_square_free()) {
    throw InvalidArgument("depth_profile: symbolic powers need a square-free ideal");
  }
  DepthProfile out;
  out.kind = kind;
  out.entries.resize(static_cast<std::size_t>(n_max));

  std::optional<NewtonPolyhedron> np;
  if (kind == PowerKind::closure && !ideal.is_zero()) np = newton_polyhedron(ideal);

  parallel_for(static_cast<std::size_t>(n_max), [&](std::size_t i) {
    const int n = static_cast<int>(i) + 1;
    const MonomialIdeal j = np ? integral_closure_power(ideal, *np, n) : power_of_kind(ideal, kind, n);
    out.entries[i] = depth_takayama(j, field);
  });

  std::vector<int> depths;
  for (const DepthReport& d : out.entries) depths.push_back(d.depth);
  out.observed_dstab = observed_stable_index(depths);
  out.resolved = out.observed_dstab < n_max;
  if (np) {
    out.limit_hint = static_cast<int>(ideal.arity()) - analytic_spread(ideal, *np);
  } else if (kind == PowerKind::closure) {
    out.limit_hint = static_cast<int>(ideal.arity());
  }
  return out;
}

StabilityBounds stability_bounds(int r, int d, int s, int ell, int bight) {
  if (r < 1 || d < 1 || s < 1 || ell < 1 || bight < 1) {
    throw InvalidArgument("stability_bounds: arguments must be positive");
  }
  const double lr = std::log2(r), ld = std::log2(d), ls = std::log2(s);
  const double b1_bits = 2 * (ld + std::log2(double(r) * s + s + d) + (r + 1.0) * (s - 1.0) * ld) +
                         (r + 1.0) * lr + (r + 1.0) * (s - 1.0);
  const double b2_bits = ls + 4 * std::log2(s + r) + (r + 2.0) * ls + 2 * ld +
                         (double(s) * s - s + 1) * (1 + 2 * ld);
  const double dstab_bits = 2 * ((r - 1.0) * std::log2(std::max(r - 1, 1)) + (r - 2.0) * (r + 1.0) * ld) + r * lr;
  if (std::max({b1_bits, b2_bits, dstab_bits}) > 4e6) throw Refusal("stability_bounds: values too large");

  StabilityBounds out;
  out.astab_closure = ell <= 2 ? BigInt(1) : BigInt(ell) * (ell - 1) * big_pow(d, ell - 2);

  const BigInt c = BigInt(d) * (BigInt(r) * s + s + d) * big_pow(d, std::int64_t(r + 1) * (s - 1));
  const BigInt b1 = boost::multiprecision::sqrt(c * c * big_pow(r, r + 1) * big_pow(2, std::int64_t(r + 1) * (s - 1)));
  const BigInt b2 = BigInt(s) * big_pow(s + r, 4) * big_pow(s, r + 2) * d * d *
                    big_pow(2 * std::int64_t(d) * d, std::int64_t(s) * s - s + 1);
  out.astab = std::max(b1, b2);

  if (r <= 2) {
    out.dstab_closure = 1;
  } else {
    const BigInt k = BigInt(r) * (BigInt(r) * r - 1) * big_pow(r - 1, r) *
                     big_pow(d, std::int64_t(r - 2) * (r + 1));
    out.dstab_closure = boost::multiprecision::sqrt(k * k * big_pow(r, r));
  }
  const BigInt q = BigInt(r) * (r + 1);
  out.dstab_symbolic = boost::multiprecision::sqrt(q * q * big_pow(bight, r));
  return out;
}

}  // namespace idealis
