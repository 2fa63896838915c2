#include "idealis/simplicial.hpp"

#include <algorithm>
#include <bit>

namespace idealis {

namespace {

// Inclusion-maximal members, sorted by (size, lex).
std::vector<VarSet> maximal_sets(std::vector<VarSet> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::sort(sets.begin(), sets.end(), [](VarSet a, VarSet b) { return std::popcount(a) > std::popcount(b); });
  std::vector<VarSet> kept;
  for (VarSet s : sets) {
    if (std::none_of(kept.begin(), kept.end(), [s](VarSet k) { return (s & ~k) == 0; })) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end(), varset_less);
  return kept;
}

// Facets of the complex whose faces are flagged in is_face (indexed by mask),
// with every face contained in universe.
std::vector<VarSet> facets_from_flags(const std::vector<char>& is_face, VarSet universe) {
  std::vector<VarSet> out;
  for (VarSet f = universe;; f = (f - 1) & universe) {
    if (is_face[f]) {
      bool maximal = true;
      for (VarSet rest = universe & ~f; rest && maximal; rest &= rest - 1) {
        if (is_face[f | (rest & (~rest + 1U))]) maximal = false;
      }
      if (maximal) out.push_back(f);
    }
    if (f == 0) break;
  }
  std::sort(out.begin(), out.end(), varset_less);
  return out;
}

}  // namespace

VarSet co_support(std::span<const std::int64_t> alpha) {
  VarSet cs = 0;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    if (alpha[j] < 0) cs |= VarSet{1} << j;
  }
  return cs;
}

SimplicialComplex::SimplicialComplex(std::size_t ground, std::vector<VarSet> generators)
    : ground_(ground) {
  require_mask_arity(ground, kMaxComplexGround, "SimplicialComplex");
  for (VarSet s : generators) {
    if ((s & ~full_set(ground)) != 0) throw InvalidArgument("face outside the ground set");
  }
  facets_ = maximal_sets(std::move(generators));
}

SimplicialComplex SimplicialComplex::void_complex(std::size_t ground) { return SimplicialComplex(ground, {}); }
SimplicialComplex SimplicialComplex::empty_complex(std::size_t ground) { return SimplicialComplex(ground, {0}); }
SimplicialComplex SimplicialComplex::simplex(std::size_t ground) {
  return SimplicialComplex(ground, {full_set(ground)});
}

bool SimplicialComplex::contains(VarSet face) const {
  return std::any_of(facets_.begin(), facets_.end(), [face](VarSet f) { return (face & ~f) == 0; });
}

int SimplicialComplex::dim() const {
  if (facets_.empty()) return -2;
  return std::popcount(facets_.back()) - 1;
}

std::vector<VarSet> SimplicialComplex::faces() const {
  std::vector<char> seen(std::size_t{1} << ground_, 0);
  std::vector<VarSet> out;
  for (VarSet f : facets_) {
    for (VarSet s = f;; s = (s - 1) & f) {
      if (!seen[s]) {
        seen[s] = 1;
        out.push_back(s);
      }
      if (s == 0) break;
    }
  }
  std::sort(out.begin(), out.end(), varset_less);
  return out;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f(static_cast<std::size_t>(dim() + 2), 0);
  for (VarSet s : faces()) ++f[std::popcount(s)];
  return f;
}

SimplicialComplex delta_of_ideal(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw InvalidArgument("delta_of_ideal: unit ideal");
  const std::size_t r = ideal.arity();
  require_mask_arity(r, kMaxComplexGround, "delta_of_ideal");
  // Facets are the complements of the minimal primes.
  std::vector<VarSet> facets;
  const std::vector<VarSet> supports = radical_supports(ideal);
  for (VarSet p : minimal_transversals(r, supports)) facets.push_back(full_set(r) & ~p);
  return SimplicialComplex(r, std::move(facets));
}

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex) {
  const std::size_t r = complex.ground();
  // S is a non-face iff it meets the complement of every facet.
  std::vector<VarSet> complements;
  for (VarSet f : complex.facets()) complements.push_back(full_set(r) & ~f);
  const std::vector<VarSet> nonfaces = minimal_transversals(r, complements);
  return MonomialIdeal::from_supports(r, nonfaces);
}

SimplicialComplex link(const SimplicialComplex& complex, VarSet f) {
  if (!complex.contains(f)) throw InvalidArgument("link: not a face");
  std::vector<VarSet> out;
  for (VarSet g : complex.facets()) {
    if ((f & ~g) == 0) out.push_back(g & ~f);
  }
  return SimplicialComplex(complex.ground(), std::move(out));
}

SimplicialComplex delta_alpha(const MonomialIdeal& ideal, std::span<const std::int64_t> alpha) {
  return delta_alpha(MembershipTable(ideal), alpha);
}

SimplicialComplex delta_alpha(const MembershipTable& table, std::span<const std::int64_t> alpha) {
  const std::size_t r = table.arity();
  if (alpha.size() != r) throw ArityMismatch("delta_alpha: degree has wrong length");
  require_mask_arity(r, kMaxComplexGround, "delta_alpha");
  const VarSet comp = full_set(r) & ~co_support(alpha);
  const std::size_t w = table.words();

  // hit[T] = generators dividing X^alpha away from the variables in T^c:
  // the intersection of passing(j, alpha_j) over j in T. F is a face iff hit[comp \ F] is empty.
  std::vector<std::uint64_t> hit((std::size_t{1} << r) * w, 0);
  std::vector<char> is_face(std::size_t{1} << r, 0);
  for (VarSet t = 0;; t = (t - comp) & comp) {
    std::uint64_t* cur = hit.data() + static_cast<std::size_t>(t) * w;
    bool any = false;
    if (t == 0) {
      std::copy(table.all(), table.all() + w, cur);
    } else {
      const VarSet low = t & (~t + 1U);
      const std::uint64_t* prev = hit.data() + static_cast<std::size_t>(t & ~low) * w;
      const std::uint64_t* pass = table.passing(static_cast<std::size_t>(std::countr_zero(low)),
                                                alpha[static_cast<std::size_t>(std::countr_zero(low))]);
      for (std::size_t i = 0; i < w; ++i) cur[i] = prev[i] & pass[i];
    }
    for (std::size_t i = 0; i < w; ++i) any |= cur[i] != 0;
    if (!any) is_face[comp & ~t] = 1;
    if (t == comp) break;
  }
  return SimplicialComplex(r, facets_from_flags(is_face, comp));
}

SimplicialComplex delta_alpha_closure(const NewtonPolyhedron& np, int n,
                                      std::span<const std::int64_t> alpha) {
  const std::size_t r = np.arity();
  if (alpha.size() != r) throw ArityMismatch("delta_alpha_closure: degree has wrong length");
  if (std::any_of(alpha.begin(), alpha.end(), [](std::int64_t a) { return a < 0; })) {
    throw InvalidArgument("delta_alpha_closure: degree must be nonnegative");
  }
  std::vector<VarSet> gens;
  for (const Facet& f : np.facets()) {
    if (f.evaluate(alpha) < static_cast<std::int64_t>(n) * f.offset) {
      gens.push_back(full_set(r) & ~f.support());
    }
  }
  return SimplicialComplex(r, std::move(gens));
}

SimplicialComplex delta_alpha_symbolic(const SimplicialComplex& complex, int n,
                                       std::span<const std::int64_t> alpha) {
  const std::size_t r = complex.ground();
  if (alpha.size() != r) throw ArityMismatch("delta_alpha_symbolic: degree has wrong length");
  std::vector<VarSet> gens;
  for (VarSet f : complex.facets()) {
    std::int64_t outside = 0;
    for (std::size_t j = 0; j < r; ++j) {
      if (alpha[j] < 0) throw InvalidArgument("delta_alpha_symbolic: degree must be nonnegative");
      if (!contains_var(f, j)) outside += alpha[j];
    }
    if (outside <= n - 1) gens.push_back(f);
  }
  return SimplicialComplex(r, std::move(gens));
}

std::vector<std::size_t> reduced_homology_dims(const SimplicialComplex& complex, FieldChar field) {
  if (complex.is_void()) return {0};
  const std::size_t r = complex.ground();
  const int top = complex.dim() + 1;  // largest face size

  std::vector<std::vector<VarSet>> by_size(static_cast<std::size_t>(top) + 1);
  for (VarSet s : complex.faces()) by_size[std::popcount(s)].push_back(s);
  std::size_t total = 0;
  for (const auto& v : by_size) total += v.size();
  if (total > 60000) throw Refusal("reduced_homology_dims: complex has too many faces");

  std::vector<std::uint32_t> index(std::size_t{1} << r, 0);
  for (const auto& v : by_size) {
    for (std::size_t i = 0; i < v.size(); ++i) index[v[i]] = static_cast<std::uint32_t>(i);
  }

  // rk[k] = rank of the boundary from faces of size k to faces of size k - 1.
  std::vector<std::size_t> rk(static_cast<std::size_t>(top) + 2, 0);
  for (int k = 1; k <= top; ++k) {
    const auto& src = by_size[static_cast<std::size_t>(k)];
    const auto& dst = by_size[static_cast<std::size_t>(k - 1)];
    IntMatrix d(src.size(), dst.size());
    for (std::size_t i = 0; i < src.size(); ++i) {
      int sign = 1;
      for (VarSet rest = src[i]; rest; rest &= rest - 1) {
        const VarSet v = rest & (~rest + 1U);
        d(i, index[src[i] & ~v]) = sign;
        sign = -sign;
      }
    }
    rk[static_cast<std::size_t>(k)] = rank(d, field);
  }

  std::vector<std::size_t> h(static_cast<std::size_t>(top) + 1);
  for (int k = 0; k <= top; ++k) {
    const auto ku = static_cast<std::size_t>(k);
    h[ku] = by_size[ku].size() - rk[ku] - rk[ku + 1];
  }
  return h;
}

bool is_matroid(const SimplicialComplex& complex) {
  const std::vector<VarSet> faces = complex.faces();
  for (VarSet f : faces) {
    for (VarSet g : faces) {
      if (std::popcount(f) <= std::popcount(g)) continue;
      bool exchange = false;
      for (VarSet rest = f & ~g; rest && !exchange; rest &= rest - 1) {
        exchange = complex.contains(g | (rest & (~rest + 1U)));
      }
      if (!exchange) return false;
    }
  }
  return true;
}

bool is_complete_intersection(const MonomialIdeal& ideal) {
  if (!ideal.is_square_free()) throw InvalidArgument("is_complete_intersection: ideal is not square-free");
  VarSet seen = 0;
  for (const Monomial& g : ideal.generators()) {
    const VarSet s = g.support();
    if (s & seen) return false;
    seen |= s;
  }
  return true;
}

}  // namespace idealis
