#include "chorded/graph.hpp"

#include <algorithm>

#include "chorded/util.hpp"

namespace chorded {

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

int Graph::edge_count() const {
  int total = 0;
  for (int v = 0; v < n; ++v) total += degree(v);
  return total / 2;
}

Graph graph_complement(const Graph& g) {
  Graph c(g.n);
  std::uint64_t all = g.n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << g.n) - 1;
  for (int v = 0; v < g.n; ++v) c.adj[v] = all & ~g.adj[v] & ~(std::uint64_t(1) << v);
  return c;
}

namespace {

// Maximum-cardinality search: repeatedly pick the unnumbered vertex with the
// most numbered neighbours (smallest id on ties).  Numbering runs n..1; the
// returned sequence lists vertices in elimination order 1..n.
std::vector<int> mcs_order(const Graph& g) {
  int n = g.n;
  std::vector<int> weight(n, 0), position(n, -1);
  std::vector<int> by_position(n, -1);
  for (int pos = n - 1; pos >= 0; --pos) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (position[v] < 0 && (best < 0 || weight[v] > weight[best])) best = v;
    position[best] = pos;
    by_position[pos] = best;
    std::uint64_t nb = g.adj[best];
    while (nb) {
      int u = __builtin_ctzll(nb);
      nb &= nb - 1;
      if (position[u] < 0) ++weight[u];
    }
  }
  return by_position;
}

// order is a perfect elimination order iff for every vertex, its later
// neighbours minus the first of them are all adjacent to that first one.
bool is_perfect_elimination(const Graph& g, const std::vector<int>& order) {
  int n = g.n;
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[order[i]] = i;
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    std::uint64_t later = 0;
    std::uint64_t nb = g.adj[v];
    while (nb) {
      int u = __builtin_ctzll(nb);
      nb &= nb - 1;
      if (position[u] > i) later |= std::uint64_t(1) << u;
    }
    if (!later) continue;
    int parent = -1;
    std::uint64_t scan = later;
    while (scan) {
      int u = __builtin_ctzll(scan);
      scan &= scan - 1;
      if (parent < 0 || position[u] < position[parent]) parent = u;
    }
    std::uint64_t rest = later & ~(std::uint64_t(1) << parent);
    if (rest & ~g.adj[parent]) return false;
  }
  return true;
}

}  // namespace

std::vector<int> find_chordless_cycle(const Graph& g) {
  // Smallest first: scan vertex subsets by size and test whether the induced
  // subgraph is a single cycle (connected, all degrees two).
  std::vector<int> all(g.n);
  for (int i = 0; i < g.n; ++i) all[i] = i;
  for (int size = 4; size <= g.n; ++size) {
    std::vector<int> result;
    for_each_subset(all, size, [&](const std::vector<int>& subset) {
      if (!result.empty()) return;
      std::uint64_t m = 0;
      for (int v : subset) m |= std::uint64_t(1) << v;
      for (int v : subset)
        if (__builtin_popcountll(g.adj[v] & m) != 2) return;
      // All degrees two; connected iff one cycle rather than several.
      std::uint64_t seen = std::uint64_t(1) << subset[0];
      std::uint64_t frontier = seen;
      while (frontier) {
        std::uint64_t next = 0;
        while (frontier) {
          int v = __builtin_ctzll(frontier);
          frontier &= frontier - 1;
          next |= g.adj[v] & m & ~seen;
        }
        seen |= next;
        frontier = next;
      }
      if (seen != m) return;
      // Walk the cycle to list vertices in order.
      result.push_back(subset[0]);
      int prev = -1, cur = subset[0];
      while (static_cast<int>(result.size()) < size) {
        std::uint64_t nb = g.adj[cur] & m;
        if (prev >= 0) nb &= ~(std::uint64_t(1) << prev);
        int nxt = __builtin_ctzll(nb);
        result.push_back(nxt);
        prev = cur;
        cur = nxt;
      }
    });
    if (!result.empty()) return result;
  }
  return {};
}

ChordalityWitness is_chordal_graph(const Graph& g) {
  ChordalityWitness w;
  std::vector<int> order = mcs_order(g);
  if (is_perfect_elimination(g, order)) {
    w.chordal = true;
    w.elimination_order = std::move(order);
  } else {
    w.chordal = false;
    w.chordless_cycle = find_chordless_cycle(g);
  }
  return w;
}

ChordalityWitness is_chordal_graph(const SimplicialComplex& one_dim) {
  return is_chordal_graph(graph_from_complex(one_dim));
}

Graph graph_from_complex(const SimplicialComplex& cx) {
  Graph g(cx.n_vertices());
  for (const Face& f : faces_of_dim(cx, 1)) g.add_edge(f.vertices()[0], f.vertices()[1]);
  return g;
}

SimplicialComplex complex_from_graph(const Graph& g, std::vector<std::string> labels) {
  std::vector<Face> facets;
  for (auto [u, v] : g.edges()) facets.push_back(Face({u, v}));
  return SimplicialComplex(g.n, std::move(facets), std::move(labels));
}

MonomialIdeal edge_ideal(const Graph& g) {
  std::vector<Face> gens;
  for (auto [u, v] : g.edges()) gens.push_back(Face({u, v}));
  return MonomialIdeal(g.n, std::move(gens));
}

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph graph_from_bits(int n, std::uint64_t bits) {
  Graph g(n);
  int b = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++b)
      if (bits >> b & 1) g.add_edge(u, v);
  return g;
}

}  // namespace chorded
