#pragma once

// Graphs, hypergraphs and posets, and the monomial ideals built from them.
// Vertices are 0-based.

#include <optional>
#include <utility>
#include <vector>

#include "idealis/monomial.hpp"

namespace idealis {

class Graph {
 public:
  Graph() = default;
  /// Throws InvalidArgument on loops, duplicate edges or out-of-range vertices.
  Graph(std::size_t vertices, std::vector<std::pair<std::size_t, std::size_t>> edges);

  std::size_t vertex_count() const { return n_; }
  /// Each edge as (u, v) with u < v, sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  VarSet neighbours(std::size_t v) const { return adj_[v]; }
  bool adjacent(std::size_t u, std::size_t v) const { return contains_var(adj_[u], v); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<VarSet> adj_;
};

class Hypergraph {
 public:
  Hypergraph() = default;
  /// Edges need at least two vertices and must form an antichain.
  Hypergraph(std::size_t vertices, std::vector<VarSet> edges);
  static Hypergraph from_graph(const Graph& g);

  std::size_t vertex_count() const { return n_; }
  /// Sorted by (size, lex).
  const std::vector<VarSet>& edges() const { return edges_; }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<VarSet> edges_;
};

class Poset {
 public:
  /// leq[i][j] says p_i <= p_j. Throws InvalidArgument unless it is a partial order.
  Poset(std::size_t size, std::vector<std::vector<bool>> leq);
  /// Reflexive-transitive closure of the given pairs (i <= j).
  static Poset from_relations(std::size_t size, const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

  std::size_t size() const { return leq_.size(); }
  bool leq(std::size_t i, std::size_t j) const { return leq_[i][j]; }
  /// Down-closed subsets, in increasing mask order.
  std::vector<VarSet> order_ideals() const;
  /// Length of the longest chain minus one.
  int rank() const;

 private:
  std::vector<std::vector<bool>> leq_;
};

/// Throws InvalidArgument for edgeless input.
MonomialIdeal edge_ideal(const Graph& g);
MonomialIdeal edge_ideal(const Hypergraph& h);
/// Intersection of the primes (X_i : i in E) over all edges.
MonomialIdeal cover_ideal(const Graph& g);
MonomialIdeal cover_ideal(const Hypergraph& h);

bool is_bipartite(const Graph& g);
/// Length of a shortest odd cycle; empty iff bipartite.
std::optional<int> odd_girth(const Graph& g);
/// Vertex sets of the connected components, ordered by smallest vertex.
std::vector<VarSet> components(const Graph& g);

/// Largest ordered matching (independent a_i; {a_i, b_j} an edge only if i <= j).
int ordered_matching_number(const Graph& g);
int chromatic_number(const Hypergraph& h);
/// Every square submatrix of the vertex-edge incidence matrix has determinant in {-1, 0, 1}.
/// Throws Refusal when there are too many submatrices.
bool is_unimodular(const Hypergraph& h);

/// All square-free monomials of degree d in r variables; 2 <= d <= r.
MonomialIdeal veronese_ideal(std::size_t r, std::size_t d);
/// H_P in 2k variables: X_i is variable i, Y_i is variable k + i.
MonomialIdeal poset_ideal_hp(const Poset& p);

}  // namespace idealis
