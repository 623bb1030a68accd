#include "chorded/instances.hpp"

#include <algorithm>
#include <set>

#include "chorded/util.hpp"

namespace chorded {
namespace instances {

namespace {

std::vector<std::string> digit_labels(int n) {
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = std::to_string(i + 1);
  return labels;
}

// Facets given as 1-based digit strings over vertices 1..n.
SimplicialComplex from_digits(int n, const std::vector<std::string>& facets) {
  std::vector<Face> fs;
  for (const std::string& s : facets) {
    std::vector<int> v;
    for (char c : s) v.push_back(c - '1');
    fs.push_back(Face(std::move(v)));
  }
  return SimplicialComplex(n, std::move(fs), digit_labels(n));
}

std::vector<std::string> var_labels(int n) {
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = "x" + std::to_string(i);
  return labels;
}

}  // namespace

SimplicialComplex tetra() { return from_digits(4, {"123", "124", "134", "234"}); }

SimplicialComplex solid_tetra() { return from_digits(4, {"1234"}); }

SimplicialComplex octa() {
  return from_digits(6, {"125", "235", "345", "145", "126", "236", "346", "146"});
}

SimplicialComplex octa_chorded() {
  return from_digits(6, {"125", "235", "345", "145", "126", "236", "346", "146", "123", "134"});
}

SimplicialComplex octa_filled() {
  return from_digits(6, {"125", "235", "345", "145", "126", "236", "346", "146", "123", "134",
                         "135", "136"});
}

SimplicialComplex ex216() {
  std::vector<Face> facets;
  std::vector<int> all{0, 1, 2, 3, 4, 5};
  for_each_subset(all, 3, [&](const std::vector<int>& sub) {
    Face f(sub);
    if (f == Face({0, 1, 2}) || f == Face({3, 4, 5})) return;
    facets.push_back(std::move(f));
  });
  return SimplicialComplex(6, std::move(facets), var_labels(6));
}

MonomialIdeal ex216_ideal() { return MonomialIdeal(6, {Face({0, 1, 2}), Face({3, 4, 5})}); }

SimplicialComplex rp2six() {
  return from_digits(6, {"124", "125", "134", "136", "156", "235", "236", "246", "345", "456"});
}

SimplicialComplex fig5() {
  std::vector<std::string> labels{"a", "b", "c", "d", "e"};
  auto face = [](std::initializer_list<int> v) { return Face(std::vector<int>(v)); };
  std::vector<Face> facets{face({0, 1, 2}), face({0, 1, 3}), face({0, 2, 3}),
                           face({1, 2, 3}), face({1, 2, 4}), face({2, 3, 4})};
  return SimplicialComplex(5, std::move(facets), labels);
}

SimplicialComplex fig5_closure() {
  std::vector<std::string> labels{"a", "b", "c", "d", "e"};
  auto face = [](std::initializer_list<int> v) { return Face(std::vector<int>(v)); };
  std::vector<Face> facets{face({0, 1, 2, 3}), face({1, 2, 4}), face({2, 3, 4}), face({0, 4})};
  return SimplicialComplex(5, std::move(facets), labels);
}

}  // namespace instances

SimplicialComplex random_pure_complex(Rng& rng, int n, int d, int percent) {
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  std::vector<Face> candidates;
  for_each_subset(all, d + 1, [&](const std::vector<int>& sub) { candidates.push_back(Face(sub)); });
  std::vector<Face> chosen;
  for (const Face& f : candidates)
    if (rng.chance(percent, 100)) chosen.push_back(f);
  if (chosen.empty()) chosen.push_back(candidates[rng.below(static_cast<int>(candidates.size()))]);
  return SimplicialComplex(n, std::move(chosen));
}

SimplicialComplex random_complex(Rng& rng, int n, int max_dim, int n_facets) {
  std::vector<Face> facets;
  for (int i = 0; i < n_facets; ++i) {
    int size = 1 + rng.below(std::min(max_dim + 1, n));
    std::set<int> verts;
    while (static_cast<int>(verts.size()) < size) verts.insert(rng.below(n));
    facets.push_back(Face(std::vector<int>(verts.begin(), verts.end())));
  }
  return SimplicialComplex(n, std::move(facets));
}

MonomialIdeal random_single_degree_ideal(Rng& rng, int n, int degree, int max_gens) {
  int count = 1 + rng.below(max_gens);
  std::set<Face> gens;
  for (int i = 0; i < count; ++i) {
    std::set<int> vars;
    while (static_cast<int>(vars.size()) < degree) vars.insert(rng.below(n));
    gens.insert(Face(std::vector<int>(vars.begin(), vars.end())));
  }
  return MonomialIdeal(n, std::vector<Face>(gens.begin(), gens.end()));
}

Graph random_graph(Rng& rng, int n, int percent) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.chance(percent, 100)) g.add_edge(u, v);
  return g;
}

}  // namespace chorded
