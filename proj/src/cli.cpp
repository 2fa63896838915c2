#include "idealis/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "idealis/assoc.hpp"
#include "idealis/cohomology.hpp"
#include "idealis/polyhedra.hpp"

namespace idealis {

namespace {

using ojson = nlohmann::ordered_json;

constexpr std::pair<Analysis, const char*> kAnalysisNames[] = {
    {Analysis::ass, "ass"},         {Analysis::depth, "depth"}, {Analysis::closure, "closure"},
    {Analysis::symbolic, "symbolic"}, {Analysis::stab, "stab"},   {Analysis::cm, "cm"},
    {Analysis::bounds, "bounds"},   {Analysis::verify_theorems, "verify-theorems"},
};

std::string degree_string(const MultiDegree& alpha) {
  std::string out = "(";
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(alpha[j]);
  }
  return out + ")";
}

ojson primes_json(const PrimeSet& p) {
  ojson out = ojson::array();
  for (VarSet s : p.primes()) {
    ojson one = ojson::array();
    for (std::size_t j = 0; j < 32; ++j) {
      if (contains_var(s, j)) one.push_back(j + 1);
    }
    out.push_back(one);
  }
  return out;
}

std::string bound_string(const std::optional<BigInt>& b) { return b ? b->str() : "too-large"; }

struct Row {
  int n = 1;
  std::optional<DepthReport> depth;
  std::optional<PrimeSet> ass;
};

struct Table {
  PowerKind kind = PowerKind::ordinary;
  std::vector<Row> rows;
  std::optional<DepthProfile> depth;
  std::optional<AssProfile> ass;
  std::vector<std::string> notes;  // extra "key\tvalue..." lines
};

struct Bounds {
  int r = 0, d = 0, s = 0, ell = 0, bight = 0;
  std::optional<BigInt> astab, astab_closure, dstab_closure, dstab_symbolic;
};

Bounds compute_bounds(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit()) throw InvalidArgument("bounds need a proper nonzero ideal");
  Bounds b;
  b.r = static_cast<int>(ideal.arity());
  b.d = static_cast<int>(ideal.max_degree());
  b.s = static_cast<int>(ideal.size());
  b.ell = analytic_spread(ideal);
  b.bight = big_height(ideal);
  try {
    const StabilityBounds sb = stability_bounds(b.r, b.d, b.s, b.ell, b.bight);
    b.astab = sb.astab;
    b.astab_closure = sb.astab_closure;
    b.dstab_closure = sb.dstab_closure;
    if (ideal.is_square_free()) b.dstab_symbolic = sb.dstab_symbolic;
  } catch (const Refusal&) {
    // Only the astab value can get this large; recompute the others with s = 1.
    const StabilityBounds sb = stability_bounds(b.r, b.d, 1, b.ell, b.bight);
    b.astab_closure = sb.astab_closure;
    b.dstab_closure = sb.dstab_closure;
    if (ideal.is_square_free()) b.dstab_symbolic = sb.dstab_symbolic;
  }
  return b;
}

const char* certification(int observed, bool resolved, int n_max, const std::optional<BigInt>& bound) {
  if (!resolved) return "unresolved";
  if (bound && BigInt(n_max) >= *bound && BigInt(observed) <= *bound) return "certified";
  return "observed";
}

Table build_table(const JobSpec& job, const MonomialIdeal& ideal) {
  Table t;
  int n_max = job.n_max;
  bool want_depth = true, want_ass = true;
  switch (job.analysis) {
    case Analysis::depth: n_max = 1; break;
    case Analysis::ass: want_depth = false; break;
    case Analysis::cm: want_ass = false; break;
    case Analysis::closure: t.kind = PowerKind::closure; break;
    case Analysis::symbolic: t.kind = PowerKind::symbolic; break;
    case Analysis::stab: t.kind = job.family; break;
    default: break;
  }
  if (t.kind == PowerKind::symbolic && !ideal.is_square_free()) {
    throw InvalidArgument("symbolic powers need a square-free ideal");
  }
  if (t.kind == PowerKind::closure && (ideal.is_zero() || ideal.is_unit())) {
    throw InvalidArgument("closure analysis needs a proper nonzero ideal");
  }
  if (ideal.is_unit()) throw InvalidArgument("the ideal is the unit ideal");
  if (want_ass && ideal.is_zero()) throw InvalidArgument("associated primes need a nonzero ideal");

  if (want_depth) t.depth = depth_profile(ideal, t.kind, n_max, job.field);
  if (want_ass) t.ass = ass_profile(ideal, t.kind, n_max);
  for (int n = 1; n <= n_max; ++n) {
    Row row;
    row.n = n;
    if (t.depth) row.depth = t.depth->at(n);
    if (t.ass) row.ass = t.ass->at(n);
    t.rows.push_back(std::move(row));
  }

  if (t.kind == PowerKind::closure && t.depth) {
    // Degrees alpha >= 0 carrying the depth at level m: look for lattice points
    // of the mixed region C_n, which carry the same local cohomology to level n.
    const NewtonPolyhedron np = newton_polyhedron(ideal);
    std::int64_t max_offset = 0;
    for (const Facet& f : np.facets()) max_offset = std::max(max_offset, f.offset);
    for (int m = 1; m <= n_max; ++m) {
      const auto& w = t.depth->at(m).witness;
      if (!w || co_support(w->alpha) != 0) continue;
      for (int n = m + 1; n <= n_max; ++n) {
        const std::int64_t box = job.box.value_or(n * max_offset);
        const auto x = region_has_lattice_point(mixed_region(np, m, w->alpha, n), box);
        t.notes.push_back("carry\t" + std::to_string(m) + "\t" + std::to_string(n) + "\t" +
                          (x ? "found\t" + degree_string(*x) : "none-in-box\t" + std::to_string(box)));
      }
    }
  }
  return t;
}

std::string input_summary(const InputObject& object, const MonomialIdeal& ideal, GraphIdeal choice) {
  std::string s = kind_name(object);
  if (object.index() == 1 || object.index() == 2) s += choice == GraphIdeal::edge ? " edge-ideal" : " cover-ideal";
  if (object.index() == 3) s += " stanley-reisner";
  return s + "\tr=" + std::to_string(ideal.arity()) + "\tgenerators=" + std::to_string(ideal.size());
}

void bounds_tsv(std::ostream& os, const Bounds& b) {
  os << "# invariants\tr=" << b.r << "\td=" << b.d << "\ts=" << b.s << "\tell=" << b.ell << "\tbight=" << b.bight << '\n';
  os << "# bound_astab\t" << bound_string(b.astab) << '\n';
  os << "# bound_astab_closure\t" << bound_string(b.astab_closure) << '\n';
  os << "# bound_dstab_closure\t" << bound_string(b.dstab_closure) << '\n';
  if (b.dstab_symbolic) os << "# bound_dstab_symbolic\t" << bound_string(b.dstab_symbolic) << '\n';
}

ojson bounds_json(const Bounds& b) {
  ojson j;
  j["r"] = b.r;
  j["d"] = b.d;
  j["s"] = b.s;
  j["ell"] = b.ell;
  j["bight"] = b.bight;
  j["astab"] = bound_string(b.astab);
  j["astab_closure"] = bound_string(b.astab_closure);
  j["dstab_closure"] = bound_string(b.dstab_closure);
  if (b.dstab_symbolic) j["dstab_symbolic"] = bound_string(b.dstab_symbolic);
  return j;
}

std::string render_table(const JobSpec& job, const InputObject& object, const MonomialIdeal& ideal,
                         const Table& t, const std::optional<Bounds>& bounds) {
  const int n_max = static_cast<int>(t.rows.size());
  if (job.format == Format::json) {
    ojson j;
    j["analysis"] = to_string(job.analysis);
    j["input"] = kind_name(object);
    j["ideal"] = ideal.to_string();
    j["char"] = job.field.value();
    j["family"] = to_string(t.kind);
    j["rows"] = ojson::array();
    for (const Row& row : t.rows) {
      ojson r;
      r["n"] = row.n;
      if (row.depth) {
        r["depth"] = row.depth->depth;
        r["dim"] = row.depth->dim;
        r["cm"] = row.depth->cohen_macaulay;
        if (row.depth->witness) {
          r["witness"] = {{"i", row.depth->witness->i}, {"alpha", row.depth->witness->alpha}};
        }
      }
      if (row.ass) r["ass"] = primes_json(*row.ass);
      j["rows"].push_back(r);
    }
    if (t.depth) {
      j["observed_dstab"] = {{"value", t.depth->observed_dstab}, {"resolved", t.depth->resolved}};
      if (t.depth->limit_hint) j["limit_depth"] = *t.depth->limit_hint;
    }
    if (t.ass) {
      j["observed_astab"] = {{"value", t.ass->observed_astab}, {"resolved", t.ass->resolved}};
      j["min"] = primes_json(t.ass->min_primes);
      j["embedded"] = primes_json(t.ass->embedded(n_max));
    }
    if (!t.notes.empty()) j["notes"] = t.notes;
    if (bounds) j["bounds"] = bounds_json(*bounds);
    return j.dump(2) + "\n";
  }

  std::ostringstream os;
  os << "# analysis\t" << to_string(job.analysis) << '\n';
  os << "# input\t" << input_summary(object, ideal, job.graph_ideal) << '\n';
  os << "# ideal\t" << ideal.to_string() << '\n';
  os << "# char\t" << job.field.value() << '\n';
  os << "# family\t" << to_string(t.kind) << '\n';
  os << "n\tdepth\tdim\tcm\tass\n";
  for (const Row& row : t.rows) {
    os << row.n << '\t';
    if (row.depth) {
      os << row.depth->depth << '\t' << row.depth->dim << '\t' << (row.depth->cohen_macaulay ? "yes" : "no");
    } else {
      os << "-\t-\t-";
    }
    os << '\t' << (row.ass ? row.ass->to_string() : "-") << '\n';
  }
  if (job.analysis == Analysis::depth && t.rows.front().depth && t.rows.front().depth->witness) {
    const auto& w = *t.rows.front().depth->witness;
    os << "# witness\ti=" << w.i << "\talpha=" << degree_string(w.alpha) << '\n';
  }
  if (t.depth && job.analysis != Analysis::depth) {
    const std::optional<BigInt> bound = !bounds ? std::nullopt
                                        : t.kind == PowerKind::closure ? bounds->dstab_closure
                                        : t.kind == PowerKind::symbolic ? bounds->dstab_symbolic
                                                                        : std::nullopt;
    os << "# observed_dstab\t" << t.depth->observed_dstab << '\t'
       << certification(t.depth->observed_dstab, t.depth->resolved, n_max, bound) << '\n';
    if (t.depth->limit_hint) os << "# limit_depth\t" << *t.depth->limit_hint << '\n';
  }
  if (t.ass && job.analysis != Analysis::depth) {
    const std::optional<BigInt> bound = !bounds ? std::nullopt
                                        : t.kind == PowerKind::closure ? bounds->astab_closure
                                        : t.kind == PowerKind::ordinary ? bounds->astab
                                                                        : std::nullopt;
    os << "# observed_astab\t" << t.ass->observed_astab << '\t'
       << certification(t.ass->observed_astab, t.ass->resolved, n_max, bound) << '\n';
    os << "# min\t" << t.ass->min_primes.to_string() << '\n';
    os << "# embedded\t" << t.ass->embedded(n_max).to_string() << '\n';
  }
  for (const std::string& note : t.notes) os << "# " << note << '\n';
  if (bounds) bounds_tsv(os, *bounds);
  return os.str();
}

std::string render_checks(const JobSpec& job, const std::vector<CheckResult>& checks) {
  static const char* names[] = {"PASS", "FAIL", "SKIP"};
  if (job.format == Format::json) {
    ojson j;
    j["analysis"] = to_string(job.analysis);
    j["checks"] = ojson::array();
    for (const CheckResult& c : checks) {
      j["checks"].push_back({{"name", c.name}, {"status", names[c.status]}, {"detail", c.detail}});
    }
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  for (const CheckResult& c : checks) os << names[c.status] << '\t' << c.name << '\t' << c.detail << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// Structural checks

std::vector<int> depths_of(const DepthProfile& p) {
  std::vector<int> out;
  for (const DepthReport& d : p.entries) out.push_back(d.depth);
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

CheckResult check(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok ? CheckResult::pass : CheckResult::fail, std::move(detail)};
}
CheckResult skipped(std::string name, std::string why) { return {std::move(name), CheckResult::skip, std::move(why)}; }

bool is_cycle(const Graph& g) {
  if (g.edges().size() != g.vertex_count() || components(g).size() != 1) return false;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (std::popcount(g.neighbours(v)) != 2) return false;
  }
  return true;
}

Graph induced(const Graph& g, VarSet keep) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (auto [u, v] : g.edges()) {
    if (contains_var(keep, u) && contains_var(keep, v)) edges.emplace_back(u, v);
  }
  return Graph(g.vertex_count(), std::move(edges));
}

void oracle_checks(const MonomialIdeal& ideal, const JobSpec& job, std::vector<CheckResult>& out) {
  if (ideal.is_zero() || ideal.is_unit()) return;
  double box = 1;
  for (Exponent e : ideal.max_exponents().rho) box *= e + 1.0;
  if (box * std::pow(2.0, static_cast<double>(ideal.arity())) > 2e6) {
    out.push_back(skipped("depth-oracle", "degree box too large"));
  } else {
    const int a = depth_takayama(ideal, job.field).depth, b = depth_koszul_oracle(ideal, job.field);
    out.push_back(check("depth-oracle", a == b, "local-cohomology=" + std::to_string(a) + " koszul=" + std::to_string(b)));
  }
  if (box > 2e5) {
    out.push_back(skipped("ass-oracle", "degree box too large"));
  } else {
    const PrimeSet a = ass(ideal), b = ass_witness_oracle(ideal, ideal.max_exponents());
    out.push_back(check("ass-oracle", a == b, a.to_string() + " vs " + b.to_string()));
    const bool depth_zero = depth_takayama(ideal, job.field).depth == 0;
    out.push_back(check("maximal-ideal-iff-depth-zero", a.contains_maximal() == depth_zero,
                        std::string("maximal ") + (a.contains_maximal() ? "in" : "not in") + " ass, depth " +
                            (depth_zero ? "0" : "> 0")));
  }
}

void ideal_checks(const MonomialIdeal& ideal, const JobSpec& job, std::vector<CheckResult>& out) {
  if (ideal.is_zero() || ideal.is_unit()) {
    out.push_back(skipped("ideal", "zero or unit ideal"));
    return;
  }
  const int n_max = job.n_max;
  const int r = static_cast<int>(ideal.arity());
  oracle_checks(ideal, job, out);

  const AssProfile ord = ass_profile(ideal, PowerKind::ordinary, n_max);
  bool min_in = true;
  for (const PrimeSet& e : ord.entries) min_in &= ord.min_primes.is_subset_of(e);
  out.push_back(check("min-in-ass", min_in, "min=" + ord.min_primes.to_string()));

  const AssProfile cl = ass_profile(ideal, PowerKind::closure, n_max);
  const PersistenceResult pr = persistence_check(cl);
  out.push_back(check("closure-ass-ascending", pr.ok,
                      pr.ok ? "window " + std::to_string(n_max)
                            : "n=" + std::to_string(pr.n) + " loses " + prime_to_string(pr.prime)));

  const DepthProfile dp = depth_profile(ideal, PowerKind::closure, n_max, job.field);
  const std::vector<int> d = depths_of(dp);
  bool quasi = true;
  for (int m = 1; m <= n_max; ++m) {
    for (int k = 2; m * k <= n_max; ++k) quasi &= d[m - 1] >= d[m * k - 1];
  }
  out.push_back(check("closure-depth-quasi-decreasing", quasi, "depths " + join(d)));
  // The limit is a lower bound everywhere; equality is only forced past the published index.
  const int limit = *dp.limit_hint;
  const bool above = std::all_of(d.begin(), d.end(), [&](int x) { return x >= limit; });
  std::optional<BigInt> bound;
  try {
    bound = stability_bounds(r, static_cast<int>(ideal.max_degree()), 1, analytic_spread(ideal), big_height(ideal))
                .dstab_closure;
  } catch (const Refusal&) {
  }
  bool tail = true;
  std::string where = "uncertified";
  if (bound && *bound <= n_max) {
    for (int n = static_cast<int>(*bound); n <= n_max; ++n) tail &= d[n - 1] == limit;
    where = "certified from " + bound->str();
  }
  out.push_back(check("closure-depth-limit", above && tail,
                      "r-ell=" + std::to_string(limit) + " depths " + join(d) + " " + where));

  // Lattice points of the mixed regions carry local cohomology upwards.
  const NewtonPolyhedron np = newton_polyhedron(ideal);
  std::int64_t max_offset = 0;
  for (const Facet& f : np.facets()) max_offset = std::max(max_offset, f.offset);
  bool carry_ok = true;
  int carried = 0;
  for (int m = 1; m <= n_max; ++m) {
    const auto& w = dp.at(m).witness;
    if (!w || co_support(w->alpha) != 0) continue;
    const SimplicialComplex base = delta_alpha_closure(np, m, w->alpha);
    for (int n = m + 1; n <= n_max; ++n) {
      const auto x = region_has_lattice_point(mixed_region(np, m, w->alpha, n), job.box.value_or(n * max_offset));
      if (!x) continue;
      ++carried;
      carry_ok &= delta_alpha_closure(np, n, *x) == base && d[n - 1] <= d[m - 1];
    }
  }
  out.push_back(check("closure-carry-forward", carry_ok, std::to_string(carried) + " carried degrees"));
}

void graph_checks(const Graph& g, const JobSpec& job, std::vector<CheckResult>& out) {
  if (g.edges().empty()) {
    out.push_back(skipped("graph", "no edges"));
    return;
  }
  const int n_max = job.n_max;
  const int r = static_cast<int>(g.vertex_count());
  const MonomialIdeal edge = edge_ideal(g);
  const AssProfile ap = ass_profile(edge, PowerKind::ordinary, n_max);
  bool all_min = std::all_of(ap.entries.begin(), ap.entries.end(), [&](const PrimeSet& p) { return p == ap.min_primes; });
  out.push_back(check("bipartite-iff-ass-is-min", is_bipartite(g) == all_min,
                      std::string(is_bipartite(g) ? "bipartite" : "not bipartite") + ", ass " +
                          (all_min ? "equals" : "differs from") + " min through n=" + std::to_string(n_max)));
  const PersistenceResult pr = persistence_check(ap);
  out.push_back(check("edge-ass-ascending", pr.ok,
                      pr.ok ? "window " + std::to_string(n_max)
                            : "n=" + std::to_string(pr.n) + " loses " + prime_to_string(pr.prime)));

  const auto comps = components(g);
  const auto girth = odd_girth(g);
  if (comps.size() == 1 && girth) {
    const int k = (*girth - 1) / 2;
    if (is_cycle(g)) {
      const AssProfile cp = ass_profile(edge, PowerKind::ordinary, std::max(n_max, k + 3));
      bool ok = true;
      for (int n = 1; n <= cp.n_max(); ++n) {
        if (n <= k) ok &= !cp.at(n).contains_maximal();
        if (n >= k + 1) ok &= cp.at(n) == cp.at(k + 1) && cp.at(n).contains_maximal();
      }
      out.push_back(check("odd-cycle-stable-index", ok, "expected " + std::to_string(k + 1) + ", observed " +
                                                           std::to_string(cp.observed_astab)));
    } else {
      const int bound = r - k - 1;
      if (bound <= n_max) {
        bool ok = true;
        for (int n = std::max(bound, 1); n <= n_max; ++n) ok &= ap.at(n) == ap.at(std::max(bound, 1));
        out.push_back(check("odd-girth-bound", ok, "constant from " + std::to_string(bound)));
      } else {
        out.push_back(skipped("odd-girth-bound", "bound " + std::to_string(bound) + " beyond window"));
      }
    }
  }

  std::vector<VarSet> with_edges;
  for (VarSet c : comps) {
    if (std::popcount(c) >= 2) with_edges.push_back(c);
  }
  if (with_edges.size() >= 2) {
    int sum = 0;
    bool resolved = ap.resolved;
    for (VarSet c : with_edges) {
      const AssProfile sub = ass_profile(edge_ideal(induced(g, c)), PowerKind::ordinary, n_max);
      sum += sub.observed_astab;
      resolved &= sub.resolved;
    }
    const int bound = sum - static_cast<int>(with_edges.size()) + 1;
    if (resolved) {
      out.push_back(check("component-bound", ap.observed_astab <= bound,
                          std::to_string(ap.observed_astab) + " <= " + std::to_string(bound)));
    } else {
      out.push_back(skipped("component-bound", "some profile unresolved in window"));
    }
  }

  const MonomialIdeal cover = cover_ideal(g);
  const int nu0 = ordered_matching_number(g);
  const int hi = 2 * nu0 + 2;
  const DepthProfile sp = depth_profile(cover, PowerKind::symbolic, hi, job.field);
  const std::vector<int> d = depths_of(sp);
  bool formula = true, decreasing = true;
  for (int n = std::max(1, 2 * nu0 - 1); n <= hi; ++n) formula &= d[n - 1] == r - nu0 - 1;
  for (int n = 2; n <= hi; ++n) decreasing &= d[n - 1] <= d[n - 2];
  out.push_back(check("symbolic-cover-depth", formula,
                      "nu0=" + std::to_string(nu0) + " expected " + std::to_string(r - nu0 - 1) + ", depths " + join(d)));
  out.push_back(check("symbolic-cover-decreasing", decreasing, "depths " + join(d)));

  const Hypergraph h = Hypergraph::from_graph(g);
  const AssProfile cover_ass = ass_profile(cover, PowerKind::ordinary, n_max);
  const int chi = chromatic_number(h);
  if (cover_ass.resolved) {
    out.push_back(check("chromatic-window", cover_ass.observed_astab >= chi - 1,
                        "observed " + std::to_string(cover_ass.observed_astab) + ", chi=" + std::to_string(chi)));
  } else {
    out.push_back(skipped("chromatic-window", "cover profile unresolved"));
  }
  try {
    if (is_unimodular(h)) {
      const DepthProfile cp = depth_profile(cover, PowerKind::ordinary, n_max, job.field);
      const std::vector<int> cd = depths_of(cp);
      const bool ok = std::is_sorted(cd.rbegin(), cd.rend()) && (!cp.resolved || cp.observed_dstab <= r);
      out.push_back(check("unimodular-cover-depth", ok, "depths " + join(cd)));
    } else {
      out.push_back(skipped("unimodular-cover-depth", "not unimodular"));
    }
  } catch (const Refusal& e) {
    out.push_back(skipped("unimodular-cover-depth", e.what()));
  }
  oracle_checks(edge, job, out);
}

void hypergraph_checks(const Hypergraph& h, const JobSpec& job, std::vector<CheckResult>& out) {
  if (h.edges().empty()) {
    out.push_back(skipped("hypergraph", "no edges"));
    return;
  }
  const int r = static_cast<int>(h.vertex_count());
  const MonomialIdeal cover = cover_ideal(h);
  const AssProfile ap = ass_profile(cover, PowerKind::ordinary, job.n_max);
  const int chi = chromatic_number(h);
  if (ap.resolved) {
    out.push_back(check("chromatic-window", ap.observed_astab >= chi - 1,
                        "observed " + std::to_string(ap.observed_astab) + ", chi=" + std::to_string(chi)));
  } else {
    out.push_back(skipped("chromatic-window", "cover profile unresolved"));
  }
  try {
    if (is_unimodular(h)) {
      const DepthProfile cp = depth_profile(cover, PowerKind::ordinary, job.n_max, job.field);
      const std::vector<int> cd = depths_of(cp);
      const bool ok = std::is_sorted(cd.rbegin(), cd.rend()) && (!cp.resolved || cp.observed_dstab <= r);
      out.push_back(check("unimodular-cover-depth", ok, "depths " + join(cd)));
    } else {
      out.push_back(skipped("unimodular-cover-depth", "not unimodular"));
    }
  } catch (const Refusal& e) {
    out.push_back(skipped("unimodular-cover-depth", e.what()));
  }
  oracle_checks(edge_ideal(h), job, out);
  oracle_checks(cover, job, out);
}

void complex_checks(const SimplicialComplex& c, const JobSpec& job, std::vector<CheckResult>& out) {
  const MonomialIdeal ideal = stanley_reisner_ideal(c);
  if (ideal.is_zero() || ideal.is_unit()) {
    out.push_back(skipped("complex", "simplex or void complex"));
    return;
  }
  const int n_max = job.n_max;
  const DepthProfile sym = depth_profile(ideal, PowerKind::symbolic, n_max, job.field);
  const DepthProfile ord = depth_profile(ideal, PowerKind::ordinary, n_max, job.field);
  auto all_cm = [](const DepthProfile& p) {
    return std::all_of(p.entries.begin(), p.entries.end(), [](const DepthReport& d) { return d.cohen_macaulay; });
  };
  const bool matroid = is_matroid(c), ci = is_complete_intersection(ideal);
  out.push_back(check("matroid-iff-symbolic-cm", matroid == all_cm(sym),
                      std::string(matroid ? "matroid" : "not matroid") + ", symbolic powers " +
                          (all_cm(sym) ? "all" : "not all") + " CM"));
  out.push_back(check("ci-iff-ordinary-cm", ci == all_cm(ord),
                      std::string(ci ? "complete intersection" : "not complete intersection") + ", powers " +
                          (all_cm(ord) ? "all" : "not all") + " CM"));
  bool single = true;
  for (int n = 3; n <= n_max; ++n) {
    if (sym.at(n).cohen_macaulay) single &= matroid;
    if (ord.at(n).cohen_macaulay) single &= ci;
  }
  out.push_back(check("single-power-cm", single, "n >= 3 within window"));
  oracle_checks(ideal, job, out);
}

}  // namespace

const char* to_string(Analysis a) {
  for (auto [k, name] : kAnalysisNames) {
    if (k == a) return name;
  }
  return "?";
}

std::optional<Analysis> parse_analysis(std::string_view name) {
  for (auto [k, n] : kAnalysisNames) {
    if (name == n) return k;
  }
  return std::nullopt;
}

MonomialIdeal ideal_of(const InputObject& object, GraphIdeal choice) {
  return std::visit(
      [&](const auto& x) -> MonomialIdeal {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, MonomialIdeal>) {
          return x;
        } else if constexpr (std::is_same_v<T, SimplicialComplex>) {
          return stanley_reisner_ideal(x);
        } else {
          return choice == GraphIdeal::edge ? edge_ideal(x) : cover_ideal(x);
        }
      },
      object);
}

std::vector<CheckResult> verify_theorems(const InputObject& object, const JobSpec& job) {
  std::vector<CheckResult> out;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, MonomialIdeal>) {
          ideal_checks(x, job, out);
        } else if constexpr (std::is_same_v<T, Graph>) {
          graph_checks(x, job, out);
        } else if constexpr (std::is_same_v<T, Hypergraph>) {
          hypergraph_checks(x, job, out);
        } else {
          complex_checks(x, job, out);
        }
      },
      object);
  return out;
}

Report run(const JobSpec& job, const InputObject& object) {
  if (job.n_max < 1) throw InvalidArgument("--n-max must be positive");
  if (job.analysis == Analysis::verify_theorems) {
    const auto checks = verify_theorems(object, job);
    const bool failed = std::any_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckResult::fail; });
    return {render_checks(job, checks), failed ? kExitCheckFailed : kExitOk};
  }
  const MonomialIdeal ideal = ideal_of(object, job.graph_ideal);
  if (job.analysis == Analysis::bounds) {
    const Bounds b = compute_bounds(ideal);
    if (job.format == Format::json) {
      ojson j;
      j["analysis"] = "bounds";
      j["input"] = kind_name(object);
      j["ideal"] = ideal.to_string();
      j["bounds"] = bounds_json(b);
      return {j.dump(2) + "\n", kExitOk};
    }
    std::ostringstream os;
    os << "# analysis\tbounds\n# input\t" << input_summary(object, ideal, job.graph_ideal) << "\n# ideal\t"
       << ideal.to_string() << '\n';
    bounds_tsv(os, b);
    return {os.str(), kExitOk};
  }
  const Table t = build_table(job, ideal);
  std::optional<Bounds> bounds;
  if (job.analysis == Analysis::stab || job.analysis == Analysis::closure) bounds = compute_bounds(ideal);
  return {render_table(job, object, ideal, t, bounds), kExitOk};
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Associated primes, depth and stability of powers of monomial ideals"};
  app.name("idealis");
  std::string analysis_name, format_name = "tsv", ideal_name = "edge", family_name = "ordinary";
  JobSpec job;
  std::int64_t field_char = 0;
  std::int64_t box = 0;
  std::vector<std::string> names;
  for (auto [k, n] : kAnalysisNames) names.emplace_back(n);
  app.add_option("analysis", analysis_name, "Analysis to run")->required()->check(CLI::IsMember(names));
  app.add_option("--input", job.input, "Input file (one JSON object)")->required();
  app.add_option("--n-max", job.n_max, "Largest power in the window")->check(CLI::PositiveNumber);
  app.add_option("--char", field_char, "Field characteristic: 0 or a prime");
  app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"tsv", "json"}));
  auto* box_opt = app.add_option("--box", box, "Coordinate bound for lattice-point searches")->check(CLI::PositiveNumber);
  app.add_option("--ideal", ideal_name, "Ideal of a graph or hypergraph: edge or cover")
      ->check(CLI::IsMember({"edge", "cover"}));
  app.add_option("--family", family_name, "Power family for stab")
      ->check(CLI::IsMember({"ordinary", "closure", "symbolic"}));

  std::vector<std::string> args(argv + 1, argv + argc);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "idealis: " << e.what() << "\n" << "run 'idealis --help' for usage\n";
    return kExitUsage;
  }
  job.analysis = *parse_analysis(analysis_name);
  job.format = format_name == "json" ? Format::json : Format::tsv;
  job.graph_ideal = ideal_name == "cover" ? GraphIdeal::cover : GraphIdeal::edge;
  if (box_opt->count() > 0) job.box = box;
  job.family = family_name == "closure"    ? PowerKind::closure
               : family_name == "symbolic" ? PowerKind::symbolic
                                           : PowerKind::ordinary;
  try {
    job.field = FieldChar(field_char);
  } catch (const InvalidArgument& e) {
    err << "idealis: " << e.what() << '\n';
    return kExitUsage;
  }

  InputObject object;
  try {
    object = parse_input_file(job.input);
  } catch (const ParseError& e) {
    err << "idealis: " << job.input << ": " << e.what() << '\n';
    return kExitParse;
  } catch (const Refusal& e) {
    err << "idealis: " << e.what() << '\n';
    return kExitRefusal;
  } catch (const Error& e) {
    err << "idealis: " << e.what() << '\n';
    return kExitParse;
  }

  try {
    const Report report = run(job, object);
    out << report.text;
    return report.exit_code;
  } catch (const Refusal& e) {
    err << "idealis: refused: " << e.what() << '\n';
    return kExitRefusal;
  } catch (const Error& e) {
    err << "idealis: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace idealis
