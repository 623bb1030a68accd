#pragma once

#include <cstdint>
#include <vector>

#include "chorded/complex.hpp"
#include "chorded/ideal.hpp"

namespace chorded {

/// Simple undirected graph on vertices 0..n-1, adjacency as bitmask rows.
struct Graph {
  int n = 0;
  std::vector<std::uint64_t> adj;

  Graph() = default;
  explicit Graph(int n_vertices) : n(n_vertices), adj(n_vertices, 0) {}

  void add_edge(int u, int v) {
    adj[u] |= std::uint64_t(1) << v;
    adj[v] |= std::uint64_t(1) << u;
  }
  bool has_edge(int u, int v) const { return adj[u] >> v & 1; }
  int degree(int v) const { return __builtin_popcountll(adj[v]); }
  std::vector<std::pair<int, int>> edges() const;
  int edge_count() const;

  bool operator==(const Graph&) const = default;
};

/// Edge-complement on the same vertex set.
Graph graph_complement(const Graph& g);

struct ChordalityWitness {
  bool chordal = false;
  /// Perfect elimination order when chordal (eliminated left to right).
  std::vector<int> elimination_order;
  /// An induced cycle of length >= 4 when not chordal.
  std::vector<int> chordless_cycle;
};

/// Perfect-elimination test via maximum-cardinality search.  On failure the
/// witness holds a shortest chordless cycle, found independently of the
/// elimination machinery.
ChordalityWitness is_chordal_graph(const Graph& g);
ChordalityWitness is_chordal_graph(const SimplicialComplex& one_dim);

/// Smallest induced cycle of length >= 4, or empty when none exists.  Brute
/// force over vertex subsets; intended for desk-scale graphs and as an
/// independent oracle for the elimination-order test.
std::vector<int> find_chordless_cycle(const Graph& g);

Graph graph_from_complex(const SimplicialComplex& cx);  // edges = 1-faces
SimplicialComplex complex_from_graph(const Graph& g, std::vector<std::string> labels = {});
MonomialIdeal edge_ideal(const Graph& g);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
/// Graph on n vertices whose edge set is given by `bits`, one bit per pair
/// (u,v), u < v, in lexicographic order.  Enumerating bits 0..2^(n choose 2)-1
/// walks every labeled graph exactly once.
Graph graph_from_bits(int n, std::uint64_t bits);

}  // namespace chorded
