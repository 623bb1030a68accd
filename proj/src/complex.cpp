#include "chorded/complex.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "chorded/util.hpp"

namespace chorded {

namespace {

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return labels;
}

}  // namespace

SimplicialComplex::SimplicialComplex(int n_vertices, std::vector<Face> facets,
                                     std::vector<std::string> labels)
    : n_(n_vertices), labels_(std::move(labels)), facets_(std::move(facets)) {
  if (n_ < 0 || n_ > 64) throw precondition_error("SimplicialComplex: vertex count must be in [0, 64]");
  if (labels_.empty()) labels_ = default_labels(n_);
  if (static_cast<int>(labels_.size()) != n_)
    throw precondition_error("SimplicialComplex: label count != vertex count");
  for (const Face& f : facets_)
    if (!f.empty() && f.vertices().back() >= n_)
      throw precondition_error("SimplicialComplex: facet vertex id out of range");

  // Reduce the generating list to an antichain: <F1,...,Fk> is the complex
  // generated by the F_i, so contained generators are redundant.
  std::sort(facets_.begin(), facets_.end(),
            [](const Face& a, const Face& b) { return a.size() > b.size(); });
  std::vector<Face> keep;
  std::vector<std::uint64_t> keep_masks;
  for (const Face& f : facets_) {
    std::uint64_t fm = f.mask();
    bool contained = false;
    for (std::uint64_t gm : keep_masks)
      if ((fm & ~gm) == 0) {
        contained = true;
        break;
      }
    if (!contained) {
      keep.push_back(f);
      keep_masks.push_back(fm);
    }
  }
  std::sort(keep.begin(), keep.end());
  facets_ = std::move(keep);
}

SimplicialComplex SimplicialComplex::void_complex(int n_vertices, std::vector<std::string> labels) {
  return SimplicialComplex(n_vertices, {}, std::move(labels));
}

SimplicialComplex SimplicialComplex::empty_complex(int n_vertices, std::vector<std::string> labels) {
  return SimplicialComplex(n_vertices, {Face{}}, std::move(labels));
}

int SimplicialComplex::dim() const {
  if (is_void()) throw precondition_error("dim: the void complex has no dimension");
  int d = -1;
  for (const Face& f : facets_) d = std::max(d, f.dimension());
  return d;
}

bool SimplicialComplex::is_pure() const {
  if (facets_.empty()) return true;
  int d = facets_[0].dimension();
  for (const Face& f : facets_)
    if (f.dimension() != d) return false;
  return true;
}

bool SimplicialComplex::is_face(const Face& f) const {
  std::uint64_t m = f.mask();
  for (const Face& g : facets_)
    if ((m & ~g.mask()) == 0) return true;
  return false;
}

bool SimplicialComplex::is_face_mask(std::uint64_t m) const {
  for (const Face& g : facets_)
    if ((m & ~g.mask()) == 0) return true;
  return false;
}

std::uint64_t SimplicialComplex::support_mask() const {
  std::uint64_t m = 0;
  for (const Face& f : facets_) m |= f.mask();
  return m;
}

int SimplicialComplex::support_size() const { return __builtin_popcountll(support_mask()); }

std::uint64_t SimplicialComplex::full_mask() const {
  return n_ == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n_) - 1;
}

std::string SimplicialComplex::facet_string() const {
  std::string s = "<";
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    if (i) s += ", ";
    s += to_string(facets_[i], labels_);
  }
  s += ">";
  return s;
}

std::vector<Face> faces_of_dim(const SimplicialComplex& cx, int d) {
  if (d < -1) return {};
  if (d == -1) return cx.is_void() ? std::vector<Face>{} : std::vector<Face>{Face{}};
  std::unordered_set<std::uint64_t> seen;
  std::vector<Face> out;
  for (const Face& f : cx.facets()) {
    if (f.dimension() < d) continue;
    for_each_subset(f.vertices(), d + 1, [&](const std::vector<int>& sub) {
      std::uint64_t m = 0;
      for (int v : sub) m |= std::uint64_t(1) << v;
      if (seen.insert(m).second) out.push_back(Face(sub));
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex pure_skeleton(const SimplicialComplex& cx, int d) {
  std::vector<Face> faces = faces_of_dim(cx, d);
  if (faces.empty())
    throw precondition_error("pure_skeleton: complex has no faces of dimension " + std::to_string(d));
  return SimplicialComplex(cx.n_vertices(), std::move(faces), cx.labels());
}

SimplicialComplex d_complement(const SimplicialComplex& cx, int d) {
  std::vector<int> all(cx.n_vertices());
  for (int i = 0; i < cx.n_vertices(); ++i) all[i] = i;
  std::vector<Face> facets;
  for_each_subset(all, d + 1, [&](const std::vector<int>& sub) {
    Face f(sub);
    if (!cx.is_face_mask(f.mask())) facets.push_back(std::move(f));
  });
  return SimplicialComplex(cx.n_vertices(), std::move(facets), cx.labels());
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& cx, std::uint64_t vertex_mask) {
  std::vector<Face> facets;
  for (const Face& f : cx.facets()) facets.push_back(Face::from_mask(f.mask() & vertex_mask));
  return SimplicialComplex(cx.n_vertices(), std::move(facets), cx.labels());
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& cx, const std::vector<int>& vertices) {
  std::uint64_t m = 0;
  for (int v : vertices) m |= std::uint64_t(1) << v;
  return induced_subcomplex(cx, m);
}

namespace {

// Recursively grows vertex sets all of whose (d+1)-subsets are d-faces,
// extending only with vertices above the current maximum so each set is
// reached exactly once.  Maximal ones are collected.
struct CliqueGrower {
  int n;
  int d;
  const std::unordered_set<std::uint64_t>& dfaces;

  bool extends(const std::vector<int>& t, int v) const {
    // T u {v} stays a clique iff every d-subset of T together with v is a d-face.
    bool ok = true;
    for_each_subset(t, d, [&](const std::vector<int>& sub) {
      if (!ok) return;
      std::uint64_t m = std::uint64_t(1) << v;
      for (int u : sub) m |= std::uint64_t(1) << u;
      if (!dfaces.count(m)) ok = false;
    });
    return ok;
  }

  void grow(std::vector<int>& t, std::vector<Face>& out) {
    bool maximal = true;
    for (int v = 0; v < n; ++v) {
      if (std::binary_search(t.begin(), t.end(), v)) continue;
      if (extends(t, v)) {
        maximal = false;
        if (v > t.back()) {
          t.push_back(v);
          grow(t, out);
          t.pop_back();
        }
      }
    }
    if (maximal) out.push_back(Face(t));
  }
};

}  // namespace

SimplicialComplex d_closure(const SimplicialComplex& cx, int d) {
  if (d < 0) {
    if (cx.is_void())
      throw precondition_error("d_closure: dimension required for the void complex");
    d = cx.dim();
  }
  if (!cx.is_void()) {
    if (!cx.is_pure() || cx.dim() != d)
      throw precondition_error("d_closure: complex must be pure of dimension " + std::to_string(d));
  }
  int n = cx.n_vertices();
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;

  std::vector<Face> facets;
  if (n <= d) {
    // Every subset has at most d elements; the closure is the full simplex.
    facets.push_back(Face(all));
    return SimplicialComplex(n, std::move(facets), cx.labels());
  }

  std::unordered_set<std::uint64_t> dfaces;
  for (const Face& f : faces_of_dim(cx, d)) dfaces.insert(f.mask());

  CliqueGrower grower{n, d, dfaces};
  for (const Face& f : faces_of_dim(cx, d)) {
    std::vector<int> t = f.vertices();
    grower.grow(t, facets);
  }
  // All d-element subsets are faces of the closure; the constructor drops the
  // ones already inside a larger facet.
  for_each_subset(all, d, [&](const std::vector<int>& sub) { facets.push_back(Face(sub)); });
  return SimplicialComplex(n, std::move(facets), cx.labels());
}

std::vector<SimplicialComplex> path_components(const SimplicialComplex& cx) {
  if (cx.is_void()) return {};
  if (!cx.is_pure()) throw precondition_error("path_components: complex must be pure");
  int d = cx.dim();
  const std::vector<Face>& faces = cx.facets();
  int k = static_cast<int>(faces.size());
  std::vector<int> parent(k);
  for (int i = 0; i < k; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

  if (d >= 1) {
    std::unordered_map<std::uint64_t, int> first_with_subface;
    for (int i = 0; i < k; ++i) {
      for (int v : faces[i]) {
        std::uint64_t sub = faces[i].mask() & ~(std::uint64_t(1) << v);
        auto [it, inserted] = first_with_subface.emplace(sub, i);
        if (!inserted) unite(i, it->second);
      }
    }
  }
  std::map<int, std::vector<Face>> groups;
  for (int i = 0; i < k; ++i) groups[find(i)].push_back(faces[i]);
  std::vector<SimplicialComplex> out;
  for (auto& [root, fs] : groups)
    out.emplace_back(cx.n_vertices(), std::move(fs), cx.labels());
  std::sort(out.begin(), out.end(),
            [](const SimplicialComplex& a, const SimplicialComplex& b) { return a.facets() < b.facets(); });
  return out;
}

bool is_d_complete(const SimplicialComplex& cx, int d, std::uint64_t vertex_mask) {
  std::vector<int> verts;
  for (int v = 0; v < cx.n_vertices(); ++v)
    if (vertex_mask >> v & 1) verts.push_back(v);
  bool complete = true;
  for_each_subset(verts, d + 1, [&](const std::vector<int>& sub) {
    if (!complete) return;
    std::uint64_t m = 0;
    for (int v : sub) m |= std::uint64_t(1) << v;
    if (!cx.is_face_mask(m)) complete = false;
  });
  return complete;
}

bool is_d_complete(const SimplicialComplex& cx, int d) {
  return is_d_complete(cx, d, cx.support_mask());
}

SimplicialComplex cone(const SimplicialComplex& cx, const std::string& apex_label) {
  int apex = cx.n_vertices();
  std::vector<std::string> labels = cx.labels();
  labels.push_back(apex_label.empty() ? "v" + std::to_string(apex) : apex_label);
  std::vector<Face> facets;
  if (cx.is_void()) {
    facets.push_back(Face({apex}));
  } else {
    for (const Face& f : cx.facets()) facets.push_back(f.with_vertex(apex));
  }
  return SimplicialComplex(apex + 1, std::move(facets), std::move(labels));
}

// --- text format ----------------------------------------------------------

namespace {

// Orders label tokens for id assignment: numerically when all are integers,
// by (prefix, numeric suffix) when they share an alphabetic-prefix shape,
// lexicographically otherwise.
std::vector<std::string> order_tokens(const std::vector<std::string>& tokens) {
  auto is_number = [](const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  auto split_suffix = [](const std::string& s) -> std::pair<std::string, long> {
    std::size_t i = s.size();
    while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) --i;
    if (i == s.size()) return {s, -1};
    return {s.substr(0, i), std::stol(s.substr(i))};
  };

  std::vector<std::string> sorted = tokens;
  bool all_numeric = std::all_of(sorted.begin(), sorted.end(), is_number);
  if (all_numeric) {
    std::sort(sorted.begin(), sorted.end(), [](const std::string& a, const std::string& b) {
      long x = std::stol(a), y = std::stol(b);
      return x != y ? x < y : a < b;
    });
    return sorted;
  }
  bool suffixed = std::all_of(sorted.begin(), sorted.end(),
                              [&](const std::string& s) { return split_suffix(s).second >= 0; });
  if (suffixed) {
    std::sort(sorted.begin(), sorted.end(), [&](const std::string& a, const std::string& b) {
      auto pa = split_suffix(a), pb = split_suffix(b);
      return pa != pb ? pa < pb : a < b;
    });
    return sorted;
  }
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

}  // namespace

SimplicialComplex parse_complex(std::istream& in) {
  std::string line;
  int line_no = 0;
  std::vector<std::vector<std::string>> facet_tokens;
  std::vector<std::string> all_tokens;
  std::unordered_set<std::string> seen;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    std::vector<std::string> toks;
    while (ls >> tok) {
      if (tok[0] == '#') break;
      toks.push_back(tok);
    }
    if (toks.empty()) continue;
    std::unordered_set<std::string> in_line;
    for (const std::string& t : toks) {
      if (!in_line.insert(t).second)
        throw parse_error("repeated vertex '" + t + "' in facet", line_no);
      if (seen.insert(t).second) all_tokens.push_back(t);
    }
    facet_tokens.push_back(std::move(toks));
  }
  std::vector<std::string> labels = order_tokens(all_tokens);
  std::unordered_map<std::string, int> id_of;
  for (std::size_t i = 0; i < labels.size(); ++i) id_of[labels[i]] = static_cast<int>(i);
  std::vector<Face> facets;
  for (const auto& toks : facet_tokens) {
    std::vector<int> ids;
    ids.reserve(toks.size());
    for (const std::string& t : toks) ids.push_back(id_of.at(t));
    facets.push_back(Face(std::move(ids)));
  }
  int n = static_cast<int>(labels.size());
  return SimplicialComplex(n, std::move(facets), std::move(labels));
}

SimplicialComplex parse_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open complex file: " + path);
  return parse_complex(in);
}

std::string serialize_complex(const SimplicialComplex& cx) {
  std::string out;
  for (const Face& f : cx.facets()) {
    bool first = true;
    for (int v : f) {
      if (!first) out += ' ';
      out += cx.label(v);
      first = false;
    }
    out += '\n';
  }
  return out;
}

}  // namespace chorded
