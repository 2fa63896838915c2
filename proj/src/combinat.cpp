#include "idealis/combinat.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>

#include "idealis/linalg.hpp"

namespace idealis {

namespace {

VarSet bit(std::size_t j) { return VarSet{1} << j; }

void require_edges(bool empty, const char* what) {
  if (empty) throw InvalidArgument(std::string(what) + ": no edges");
}

}  // namespace

Graph::Graph(std::size_t vertices, std::vector<std::pair<std::size_t, std::size_t>> edges)
    : n_(vertices), adj_(vertices, 0) {
  require_mask_arity(vertices, kMaxMaskArity, "Graph");
  for (auto& [u, v] : edges) {
    if (u >= n_ || v >= n_) throw InvalidArgument("edge vertex out of range");
    if (u == v) throw InvalidArgument("loop at vertex " + std::to_string(u + 1));
    if (u > v) std::swap(u, v);
    if (adjacent(u, v)) {
      throw InvalidArgument("duplicate edge {" + std::to_string(u + 1) + "," + std::to_string(v + 1) + "}");
    }
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
  }
  std::sort(edges.begin(), edges.end());
  edges_ = std::move(edges);
}

Hypergraph::Hypergraph(std::size_t vertices, std::vector<VarSet> edges) : n_(vertices) {
  require_mask_arity(vertices, kMaxMaskArity, "Hypergraph");
  for (VarSet e : edges) {
    if ((e & ~full_set(n_)) != 0) throw InvalidArgument("edge vertex out of range");
    if (std::popcount(e) < 2) throw InvalidArgument("hypergraph edges need at least two vertices");
  }
  std::sort(edges.begin(), edges.end(), varset_less);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (i != j && (edges[i] & ~edges[j]) == 0) {
        throw InvalidArgument("hypergraph edges must form an antichain");
      }
    }
  }
  edges_ = std::move(edges);
}

Hypergraph Hypergraph::from_graph(const Graph& g) {
  std::vector<VarSet> edges;
  for (auto [u, v] : g.edges()) edges.push_back(bit(u) | bit(v));
  return Hypergraph(g.vertex_count(), std::move(edges));
}

Poset::Poset(std::size_t size, std::vector<std::vector<bool>> leq) : leq_(std::move(leq)) {
  if (size == 0) throw InvalidArgument("empty poset");
  require_mask_arity(size, 16, "Poset");
  if (leq_.size() != size) throw InvalidArgument("poset relation has wrong size");
  for (const auto& row : leq_) {
    if (row.size() != size) throw InvalidArgument("poset relation has wrong size");
  }
  for (std::size_t i = 0; i < size; ++i) {
    if (!leq_[i][i]) throw InvalidArgument("poset relation is not reflexive");
    for (std::size_t j = 0; j < size; ++j) {
      if (i != j && leq_[i][j] && leq_[j][i]) throw InvalidArgument("poset relation is not antisymmetric");
      for (std::size_t k = 0; k < size; ++k) {
        if (leq_[i][j] && leq_[j][k] && !leq_[i][k]) throw InvalidArgument("poset relation is not transitive");
      }
    }
  }
}

Poset Poset::from_relations(std::size_t size, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  std::vector<std::vector<bool>> leq(size, std::vector<bool>(size, false));
  for (std::size_t i = 0; i < size; ++i) leq[i][i] = true;
  for (auto [a, b] : pairs) {
    if (a >= size || b >= size) throw InvalidArgument("poset element out of range");
    leq[a][b] = true;
  }
  for (std::size_t k = 0; k < size; ++k) {
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) {
        if (leq[i][k] && leq[k][j]) leq[i][j] = true;
      }
    }
  }
  return Poset(size, std::move(leq));
}

std::vector<VarSet> Poset::order_ideals() const {
  const std::size_t k = size();
  std::vector<VarSet> below(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (leq_[j][i]) below[i] |= bit(j);
    }
  }
  std::vector<VarSet> out;
  for (VarSet s = 0; s <= full_set(k); ++s) {
    bool closed = true;
    for (std::size_t i = 0; i < k && closed; ++i) {
      if (contains_var(s, i)) closed = (below[i] & ~s) == 0;
    }
    if (closed) out.push_back(s);
  }
  return out;
}

int Poset::rank() const {
  const std::size_t k = size();
  // Longest chain ending at each element; elements sorted by the number of
  // elements below them form a linear extension.
  std::vector<std::size_t> order(k);
  std::vector<int> below(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    order[i] = i;
    for (std::size_t j = 0; j < k; ++j) below[i] += leq_[j][i] ? 1 : 0;
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
  std::vector<int> chain(k, 1);
  int best = 1;
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < x; ++y) {
      if (leq_[order[y]][order[x]]) chain[order[x]] = std::max(chain[order[x]], chain[order[y]] + 1);
    }
    best = std::max(best, chain[order[x]]);
  }
  return best - 1;
}

MonomialIdeal edge_ideal(const Graph& g) {
  require_edges(g.edges().empty(), "edge_ideal");
  return edge_ideal(Hypergraph::from_graph(g));
}

MonomialIdeal edge_ideal(const Hypergraph& h) {
  require_edges(h.edges().empty(), "edge_ideal");
  return MonomialIdeal::from_supports(h.vertex_count(), h.edges());
}

MonomialIdeal cover_ideal(const Graph& g) {
  require_edges(g.edges().empty(), "cover_ideal");
  return cover_ideal(Hypergraph::from_graph(g));
}

MonomialIdeal cover_ideal(const Hypergraph& h) {
  require_edges(h.edges().empty(), "cover_ideal");
  const std::size_t r = h.vertex_count();
  MonomialIdeal acc = MonomialIdeal::unit(r);
  for (VarSet e : h.edges()) acc = intersect(acc, MonomialIdeal::prime(r, e));
  return acc;
}

bool is_bipartite(const Graph& g) { return !odd_girth(g).has_value(); }

std::optional<int> odd_girth(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::optional<int> best;
  for (std::size_t root = 0; root < n; ++root) {
    std::vector<int> dist(n, -1);
    std::deque<std::size_t> queue{root};
    dist[root] = 0;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (VarSet rest = g.neighbours(u); rest; rest &= rest - 1) {
        const auto v = static_cast<std::size_t>(std::countr_zero(rest));
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        } else if (dist[v] == dist[u]) {
          // Closed walk of odd length through root; it contains an odd cycle no longer than it.
          const int len = 2 * dist[u] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

std::vector<VarSet> components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<VarSet> out;
  VarSet seen = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (contains_var(seen, v)) continue;
    VarSet comp = bit(v), frontier = bit(v);
    while (frontier) {
      VarSet next = 0;
      for (VarSet rest = frontier; rest; rest &= rest - 1) {
        next |= g.neighbours(static_cast<std::size_t>(std::countr_zero(rest)));
      }
      frontier = next & ~comp;
      comp |= next;
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

namespace {

// Extends an ordered matching (a_1, b_1) .. (a_s, b_s) by one more pair.
void extend_ordered_matching(const Graph& g, VarSet used, VarSet tails, VarSet heads, int size, int& best) {
  best = std::max(best, size);
  const std::size_t n = g.vertex_count();
  if (size + static_cast<int>(n - std::popcount(used)) / 2 <= best) return;
  for (std::size_t a = 0; a < n; ++a) {
    if (contains_var(used, a)) continue;
    // a must not be adjacent to earlier a_i (independence) nor to earlier b_i
    // ({a_s, b_i} with i < s is forbidden).
    if (g.neighbours(a) & (tails | heads)) continue;
    for (VarSet rest = g.neighbours(a) & ~used; rest; rest &= rest - 1) {
      const auto b = static_cast<std::size_t>(std::countr_zero(rest));
      extend_ordered_matching(g, used | bit(a) | bit(b), tails | bit(a), heads | bit(b), size + 1, best);
    }
  }
}

}  // namespace

int ordered_matching_number(const Graph& g) {
  require_edges(g.edges().empty(), "ordered_matching_number");
  require_mask_arity(g.vertex_count(), 16, "ordered_matching_number");
  int best = 0;
  extend_ordered_matching(g, 0, 0, 0, 0, best);
  return best;
}

int chromatic_number(const Hypergraph& h) {
  const std::size_t n = h.vertex_count();
  require_mask_arity(n, 20, "chromatic_number");
  if (h.edges().empty()) return n == 0 ? 0 : 1;
  // Edges completed when vertex v is coloured, i.e. whose largest vertex is v.
  std::vector<std::vector<VarSet>> closing(n);
  for (VarSet e : h.edges()) closing[31 - std::countl_zero(e)].push_back(e);

  std::vector<VarSet> classes;
  auto colour = [&](auto&& self, std::size_t v, std::size_t t) -> bool {
    if (v == n) return true;
    const std::size_t limit = std::min(classes.size() + 1, t);
    for (std::size_t c = 0; c < limit; ++c) {
      if (c == classes.size()) classes.push_back(0);
      classes[c] |= bit(v);
      bool ok = std::none_of(closing[v].begin(), closing[v].end(),
                             [&](VarSet e) { return (e & ~classes[c]) == 0; });
      if (ok && self(self, v + 1, t)) return true;
      classes[c] &= ~bit(v);
      if (classes[c] == 0) classes.pop_back();
    }
    return false;
  };
  for (std::size_t t = 1;; ++t) {
    classes.clear();
    if (colour(colour, 0, t)) return static_cast<int>(t);
  }
}

bool is_unimodular(const Hypergraph& h) {
  const std::size_t m = h.vertex_count(), e = h.edges().size();
  // sum_k C(m,k) C(e,k) = C(m+e, m) square submatrices.
  double count = 1;
  for (std::size_t i = 1; i <= std::min(m, e); ++i) count = count * double(m + e - i + 1) / double(i);
  if (count > 4e6) throw Refusal("is_unimodular: incidence matrix too large");

  std::vector<std::size_t> rows, cols;
  auto check = [&](auto&& self, std::size_t k, std::size_t next_row, std::size_t next_col) -> bool {
    if (rows.size() == k && cols.size() == k) {
      IntMatrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = contains_var(h.edges()[cols[j]], rows[i]) ? 1 : 0;
      }
      const BigInt d = determinant(sub);
      return d >= -1 && d <= 1;
    }
    if (rows.size() < k) {
      for (std::size_t i = next_row; i < m; ++i) {
        rows.push_back(i);
        const bool ok = self(self, k, i + 1, next_col);
        rows.pop_back();
        if (!ok) return false;
      }
      return true;
    }
    for (std::size_t j = next_col; j < e; ++j) {
      cols.push_back(j);
      const bool ok = self(self, k, next_row, j + 1);
      cols.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  for (std::size_t k = 1; k <= std::min(m, e); ++k) {
    if (!check(check, k, 0, 0)) return false;
  }
  return true;
}

MonomialIdeal veronese_ideal(std::size_t r, std::size_t d) {
  if (d < 2 || d > r) throw InvalidArgument("veronese_ideal: need 2 <= d <= r");
  require_mask_arity(r, 24, "veronese_ideal");
  std::vector<VarSet> sets;
  for (VarSet s = 0; s <= full_set(r); ++s) {
    if (static_cast<std::size_t>(std::popcount(s)) == d) sets.push_back(s);
  }
  return MonomialIdeal::from_supports(r, sets);
}

MonomialIdeal poset_ideal_hp(const Poset& p) {
  const std::size_t k = p.size();
  std::vector<VarSet> sets;
  for (VarSet ideal : p.order_ideals()) sets.push_back(ideal | ((full_set(k) & ~ideal) << k));
  return MonomialIdeal::from_supports(2 * k, sets);
}

}  // namespace idealis
