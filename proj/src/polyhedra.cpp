#include "idealis/polyhedra.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "idealis/linalg.hpp"

namespace idealis {

namespace {

void require_proper_nonzero(const MonomialIdeal& ideal, const char* what) {
  if (ideal.is_zero() || ideal.is_unit()) {
    throw InvalidArgument(std::string(what) + ": ideal must be proper and nonzero");
  }
}

std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw Error("facet coefficient out of range");
  }
  return static_cast<std::int64_t>(v);
}

// Calls fn(indices) for every k-subset of {0..n-1} in lexicographic order.
template <class Fn>
void for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  for (;;) {
    fn(std::span<const std::size_t>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<IntVector> exponent_points(const MonomialIdeal& ideal) {
  std::vector<IntVector> pts;
  for (const Monomial& g : ideal.generators()) {
    pts.emplace_back(g.exponents().begin(), g.exponents().end());
  }
  return pts;
}

// Number of affinely independent points among pts.
std::size_t affine_rank(const std::vector<const IntVector*>& pts) {
  if (pts.empty()) return 0;
  const std::size_t r = pts.front()->size();
  IntMatrix diffs(pts.size() - 1, r);
  for (std::size_t i = 1; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < r; ++j) diffs(i - 1, j) = (*pts[i])[j] - (*pts.front())[j];
  }
  return rank(diffs, FieldChar{}) + 1;
}

}  // namespace

VarSet Facet::support() const {
  VarSet s = 0;
  for (std::size_t j = 0; j < normal.size(); ++j) {
    if (normal[j] != 0) s |= VarSet{1} << j;
  }
  return s;
}

std::int64_t Facet::evaluate(std::span<const std::int64_t> x) const {
  std::int64_t acc = 0;
  for (std::size_t j = 0; j < normal.size(); ++j) acc += normal[j] * x[j];
  return acc;
}

NewtonPolyhedron::NewtonPolyhedron(std::size_t arity, std::vector<Facet> facets)
    : arity_(arity), facets_(std::move(facets)) {
  for (const Facet& f : facets_) {
    if (f.normal.size() != arity_) throw ArityMismatch("facet normal has wrong length");
  }
  std::sort(facets_.begin(), facets_.end());
  facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
}

NewtonPolyhedron newton_polyhedron(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal, "newton_polyhedron");
  const std::size_t r = ideal.arity();
  require_mask_arity(r, 16, "newton_polyhedron");
  const std::vector<IntVector> pts = exponent_points(ideal);

  std::set<Facet> found;
  for (VarSet support = 1; support <= full_set(r); ++support) {
    std::vector<std::size_t> coords;
    for (std::size_t j = 0; j < r; ++j) {
      if (contains_var(support, j)) coords.push_back(j);
    }
    const std::size_t s = coords.size();

    std::vector<IntVector> proj;
    for (const IntVector& p : pts) {
      IntVector q(s);
      for (std::size_t i = 0; i < s; ++i) q[i] = p[coords[i]];
      proj.push_back(std::move(q));
    }
    std::sort(proj.begin(), proj.end());
    proj.erase(std::unique(proj.begin(), proj.end()), proj.end());

    for_each_combination(proj.size(), s, [&](std::span<const std::size_t> pick) {
      // Rows (p, -1); the kernel vector (a, b) gives <a, p> = b on all picked points.
      IntMatrix minor(s, s);
      IntVector kernel(s + 1);
      for (std::size_t skip = 0; skip <= s; ++skip) {
        for (std::size_t i = 0; i < s; ++i) {
          std::size_t col = 0;
          for (std::size_t c = 0; c <= s; ++c) {
            if (c == skip) continue;
            minor(i, col++) = c < s ? proj[pick[i]][c] : -1;
          }
        }
        const std::int64_t d = to_int64(determinant(minor));
        kernel[skip] = skip % 2 == 0 ? d : -d;
      }
      if (std::all_of(kernel.begin(), kernel.end(), [](std::int64_t v) { return v == 0; })) return;
      if (kernel[0] < 0) {
        for (auto& v : kernel) v = -v;
      }
      for (std::size_t i = 0; i < s; ++i) {
        if (kernel[i] <= 0) return;
      }
      std::int64_t g = 0;
      for (std::int64_t v : kernel) g = std::gcd(g, v);
      for (auto& v : kernel) v /= g;

      Facet f{IntVector(r, 0), kernel[s]};
      for (std::size_t i = 0; i < s; ++i) f.normal[coords[i]] = kernel[i];
      for (const IntVector& p : pts) {
        if (f.evaluate(p) < f.offset) return;
      }
      found.insert(std::move(f));
    });
  }
  return NewtonPolyhedron(r, std::vector<Facet>(found.begin(), found.end()));
}

bool np_contains(const NewtonPolyhedron& np, int n, std::span<const std::int64_t> x) {
  if (x.size() != np.arity()) throw ArityMismatch("np_contains: point has wrong length");
  if (std::any_of(x.begin(), x.end(), [](std::int64_t v) { return v < 0; })) return false;
  return std::all_of(np.facets().begin(), np.facets().end(),
                     [&](const Facet& f) { return f.evaluate(x) >= n * f.offset; });
}

MonomialIdeal integral_closure_power(const MonomialIdeal& ideal, int n) {
  require_proper_nonzero(ideal, "integral_closure_power");
  return integral_closure_power(ideal, newton_polyhedron(ideal), n);
}

MonomialIdeal integral_closure_power(const MonomialIdeal& ideal, const NewtonPolyhedron& np, int n) {
  require_proper_nonzero(ideal, "integral_closure_power");
  if (n < 1) throw InvalidArgument("integral_closure_power: n must be positive");
  const std::size_t r = ideal.arity();
  const MaxExponents rho = ideal.max_exponents();
  // Minimal lattice points of n*NP(I) satisfy x_j <= n * rho_j.
  IntVector hi(r);
  for (std::size_t j = 0; j < r; ++j) hi[j] = static_cast<std::int64_t>(n) * rho.rho[j];

  std::vector<Monomial> gens;
  IntVector x(r, 0);
  for (;;) {
    if (np_contains(np, n, x)) {
      bool minimal = true;
      for (std::size_t j = 0; j < r && minimal; ++j) {
        if (x[j] == 0) continue;
        --x[j];
        if (np_contains(np, n, x)) minimal = false;
        ++x[j];
      }
      if (minimal) {
        std::vector<Exponent> e(r);
        for (std::size_t j = 0; j < r; ++j) e[j] = static_cast<Exponent>(x[j]);
        gens.emplace_back(std::move(e));
      }
    }
    std::size_t j = r;
    while (j > 0 && x[j - 1] == hi[j - 1]) x[--j] = 0;
    if (j == 0) break;
    ++x[j - 1];
  }
  return minimalize(r, std::move(gens));
}

int analytic_spread(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal, "analytic_spread");
  return analytic_spread(ideal, newton_polyhedron(ideal));
}

int analytic_spread(const MonomialIdeal& ideal, const NewtonPolyhedron& np) {
  require_proper_nonzero(ideal, "analytic_spread");
  const std::vector<IntVector> pts = exponent_points(ideal);
  const auto& facets = np.facets();
  const VarSet all = full_set(ideal.arity());

  using PointSet = std::vector<bool>;
  auto tight_points = [&](const Facet& f) {
    PointSet t(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) t[i] = f.evaluate(pts[i]) == f.offset;
    return t;
  };
  std::vector<PointSet> facet_tight;
  for (const Facet& f : facets) facet_tight.push_back(tight_points(f));

  // Every face is an intersection of facets; close the facet point sets under
  // intersection and evaluate each resulting face.
  std::set<PointSet> faces;
  std::vector<PointSet> frontier;
  for (const PointSet& t : facet_tight) {
    if (std::find(t.begin(), t.end(), true) != t.end() && faces.insert(t).second) frontier.push_back(t);
  }
  while (!frontier.empty()) {
    std::vector<PointSet> next;
    for (const PointSet& a : frontier) {
      for (const PointSet& b : facet_tight) {
        PointSet c(pts.size());
        bool nonempty = false;
        for (std::size_t i = 0; i < pts.size(); ++i) nonempty |= (c[i] = a[i] && b[i]);
        if (nonempty && faces.insert(c).second) next.push_back(std::move(c));
      }
    }
    frontier = std::move(next);
  }

  int best = 1;
  for (const PointSet& t : faces) {
    // Smallest face containing t: all facets tight on t.
    VarSet covered = 0;
    PointSet face_pts(pts.size(), true);
    for (std::size_t f = 0; f < facets.size(); ++f) {
      bool tight = true;
      for (std::size_t i = 0; i < pts.size() && tight; ++i) tight = !t[i] || facet_tight[f][i];
      if (!tight) continue;
      covered |= facets[f].support();
      for (std::size_t i = 0; i < pts.size(); ++i) face_pts[i] = face_pts[i] && facet_tight[f][i];
    }
    if (covered != all) continue;
    std::vector<const IntVector*> members;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (face_pts[i]) members.push_back(&pts[i]);
    }
    best = std::max(best, static_cast<int>(affine_rank(members)));
  }
  return best;
}

bool MixedRegion::contains(std::span<const std::int64_t> x) const {
  if (x.size() != arity) throw ArityMismatch("MixedRegion: point has wrong length");
  auto dot = [&](const IntVector& a) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < arity; ++j) acc += a[j] * x[j];
    return acc;
  };
  if (std::any_of(x.begin(), x.end(), [](std::int64_t v) { return v < 0; })) return false;
  for (const Constraint& c : strict) {
    if (dot(c.normal) >= c.bound) return false;
  }
  for (const Constraint& c : weak) {
    if (dot(c.normal) < c.bound) return false;
  }
  return true;
}

MixedRegion mixed_region(const NewtonPolyhedron& np, int m, std::span<const std::int64_t> beta, int n) {
  if (beta.size() != np.arity()) throw ArityMismatch("mixed_region: point has wrong length");
  MixedRegion out;
  out.arity = np.arity();
  for (const Facet& f : np.facets()) {
    MixedRegion::Constraint c{f.normal, static_cast<std::int64_t>(n) * f.offset};
    if (f.evaluate(beta) < static_cast<std::int64_t>(m) * f.offset) {
      out.strict.push_back(std::move(c));
    } else {
      out.weak.push_back(std::move(c));
    }
  }
  return out;
}

std::optional<IntVector> region_has_lattice_point(const MixedRegion& region, std::int64_t box) {
  if (box < 0) throw InvalidArgument("region_has_lattice_point: negative box");
  const std::size_t r = region.arity;
  IntVector x(r, 0);
  for (;;) {
    if (region.contains(x)) return x;
    std::size_t j = r;
    while (j > 0 && x[j - 1] == box) x[--j] = 0;
    if (j == 0) return std::nullopt;
    ++x[j - 1];
  }
}

}  // namespace idealis
