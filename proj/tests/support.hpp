#pragma once

// Brute-force oracles and helpers shared by the unit and acceptance suites.
// Everything here recomputes results from first principles, independently of
// the library's kernel/elimination machinery, so the two routes cross-check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "chorded/complex.hpp"
#include "chorded/face.hpp"
#include "chorded/graph.hpp"

namespace oracle {

using chorded::Face;
using chorded::Graph;
using chorded::SimplicialComplex;

// Even-incidence + connectivity check on an explicit face subset, with no
// linear algebra: counts (d-1)-face incidences and floods the dual graph.
inline bool subset_is_cycle(const std::vector<Face>& faces) {
  if (faces.empty()) return false;
  std::map<std::uint64_t, std::vector<int>> incident;
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (int v : faces[i])
      incident[faces[i].mask() & ~(std::uint64_t(1) << v)].push_back(static_cast<int>(i));
  for (auto& [sub, ids] : incident)
    if (ids.size() % 2) return false;
  // Flood fill across shared (d-1)-faces.
  std::vector<bool> seen(faces.size(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    int cur = stack.back();
    stack.pop_back();
    for (int v : faces[cur]) {
      for (int nb : incident[faces[cur].mask() & ~(std::uint64_t(1) << v)]) {
        if (!seen[nb]) {
          seen[nb] = true;
          stack.push_back(nb);
        }
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

// All face-minimal d-cycles by exhausting the 2^f subsets of the d-faces.
// Usable up to a dozen or so faces.
inline std::vector<std::set<Face>> brute_force_face_minimal_cycles(const SimplicialComplex& cx,
                                                                   int d) {
  std::vector<Face> faces = chorded::faces_of_dim(cx, d);
  int f = static_cast<int>(faces.size());
  std::vector<std::uint64_t> cycles;
  for (std::uint64_t s = 1; s < (std::uint64_t(1) << f); ++s) {
    std::vector<Face> subset;
    for (int i = 0; i < f; ++i)
      if (s >> i & 1) subset.push_back(faces[i]);
    if (subset_is_cycle(subset)) cycles.push_back(s);
  }
  std::vector<std::set<Face>> minimal;
  for (std::uint64_t s : cycles) {
    bool is_minimal = true;
    for (std::uint64_t t : cycles)
      if (t != s && (t & ~s) == 0) {
        is_minimal = false;
        break;
      }
    if (!is_minimal) continue;
    std::set<Face> fs;
    for (int i = 0; i < f; ++i)
      if (s >> i & 1) fs.insert(faces[i]);
    minimal.push_back(std::move(fs));
  }
  return minimal;
}

// Dedicated DFS cycle finder: every simple cycle of the graph, each reported
// once as its sorted edge set.
inline std::vector<std::set<std::pair<int, int>>> all_simple_cycles(const Graph& g) {
  std::set<std::set<std::pair<int, int>>> found;
  std::vector<int> path;
  std::vector<bool> on_path(g.n, false);

  // Cycles are rooted at their smallest vertex to avoid duplicates.
  std::function<void(int, int)> dfs = [&](int root, int cur) {
    for (int nxt = 0; nxt < g.n; ++nxt) {
      if (!g.has_edge(cur, nxt) || nxt < root) continue;
      if (nxt == root && path.size() >= 3) {
        std::set<std::pair<int, int>> edges;
        for (std::size_t i = 0; i < path.size(); ++i) {
          int a = path[i], b = path[(i + 1) % path.size()];
          edges.insert({std::min(a, b), std::max(a, b)});
        }
        found.insert(std::move(edges));
        continue;
      }
      if (on_path[nxt]) continue;
      path.push_back(nxt);
      on_path[nxt] = true;
      dfs(root, nxt);
      on_path[nxt] = false;
      path.pop_back();
    }
  };
  for (int root = 0; root < g.n; ++root) {
    path = {root};
    on_path.assign(g.n, false);
    on_path[root] = true;
    dfs(root, root);
  }
  return {found.begin(), found.end()};
}

// Simple cycles of length >= 4 with no chord in g.
inline std::vector<std::set<std::pair<int, int>>> all_chordless_cycles(const Graph& g) {
  std::vector<std::set<std::pair<int, int>>> out;
  for (const auto& cyc : all_simple_cycles(g)) {
    if (cyc.size() < 4) continue;
    std::set<int> verts;
    for (auto [a, b] : cyc) {
      verts.insert(a);
      verts.insert(b);
    }
    bool chorded_cycle = false;
    for (int a : verts)
      for (int b : verts)
        if (a < b && g.has_edge(a, b) && !cyc.count({a, b})) chorded_cycle = true;
    if (!chorded_cycle) out.push_back(cyc);
  }
  return out;
}

// Definitional chord-set existence check for tiny instances: every chord
// subset within V(Omega), every family of strictly smaller cycles, all four
// properties verified literally.  Returns nullopt when the instance is too
// big to brute force.
inline std::optional<bool> brute_force_has_chord_set(const SimplicialComplex& ambient,
                                                     const SimplicialComplex& omega) {
  int d = omega.dim();
  std::uint64_t v_omega = omega.support_mask();
  int omega_vertices = __builtin_popcountll(v_omega);
  std::set<Face> omega_faces(omega.facets().begin(), omega.facets().end());

  std::vector<Face> chords_avail;
  for (const Face& f : chorded::faces_of_dim(ambient, d)) {
    if (omega_faces.count(f)) continue;
    if (f.mask() & ~v_omega) continue;
    chords_avail.push_back(f);
  }
  if (chords_avail.size() > 5) return std::nullopt;

  for (std::uint64_t cbits = 0; cbits < (std::uint64_t(1) << chords_avail.size()); ++cbits) {
    std::vector<Face> k_faces = omega.facets();
    std::set<Face> chord_set;
    for (std::size_t i = 0; i < chords_avail.size(); ++i)
      if (cbits >> i & 1) {
        k_faces.push_back(chords_avail[i]);
        chord_set.insert(chords_avail[i]);
      }
    if (k_faces.size() > 14) return std::nullopt;

    // All cycles on fewer vertices than Omega inside <C u facets(Omega)>.
    std::vector<std::vector<Face>> cycles;
    for (std::uint64_t s = 1; s < (std::uint64_t(1) << k_faces.size()); ++s) {
      std::vector<Face> subset;
      std::uint64_t verts = 0;
      for (std::size_t i = 0; i < k_faces.size(); ++i)
        if (s >> i & 1) {
          subset.push_back(k_faces[i]);
          verts |= k_faces[i].mask();
        }
      if (__builtin_popcountll(verts) >= omega_vertices) continue;
      if (subset_is_cycle(subset)) cycles.push_back(std::move(subset));
    }
    if (cycles.size() > 18) return std::nullopt;

    for (std::uint64_t fam = 0; fam < (std::uint64_t(1) << cycles.size()); ++fam) {
      if (__builtin_popcountll(fam) < 2) continue;
      std::map<Face, int> coverage;
      for (std::size_t i = 0; i < cycles.size(); ++i)
        if (fam >> i & 1)
          for (const Face& f : cycles[i]) ++coverage[f];
      bool ok = coverage.size() == k_faces.size();  // union covers C and Omega
      for (const auto& [f, count] : coverage) {
        if (!ok) break;
        if (omega_faces.count(f))
          ok = count % 2 == 1;
        else if (chord_set.count(f))
          ok = count % 2 == 0;
        else
          ok = false;
      }
      if (ok) return true;
    }
  }
  return false;
}

// Rank over GF(2) with naive bool arithmetic (no word packing): the
// independent route for checking the packed eliminator.
inline int naive_rank(std::vector<std::vector<int>> m) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size();
  int rank = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r)
      if (m[r][c]) {
        pivot = r;
        break;
      }
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t r = 0; r < rows; ++r)
      if (r != static_cast<std::size_t>(rank) && m[r][c])
        for (std::size_t j = 0; j < cols; ++j) m[r][j] ^= m[rank][j];
    ++rank;
  }
  return rank;
}

}  // namespace oracle
