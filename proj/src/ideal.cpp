#include "chorded/ideal.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

#include "chorded/util.hpp"

namespace chorded {

MonomialIdeal::MonomialIdeal(int n_variables, std::vector<Face> generators)
    : n_(n_variables), gens_(std::move(generators)) {
  if (n_ < 0 || n_ > 64) throw precondition_error("MonomialIdeal: variable count must be in [0, 64]");
  for (const Face& g : gens_) {
    if (g.empty()) throw precondition_error("MonomialIdeal: empty generator (unit ideal)");
    if (g.vertices().back() >= n_) throw precondition_error("MonomialIdeal: variable index out of range");
  }
  // Minimal generating set: drop any generator containing another.
  std::sort(gens_.begin(), gens_.end(),
            [](const Face& a, const Face& b) { return a.size() < b.size(); });
  std::vector<Face> keep;
  for (const Face& g : gens_) {
    bool redundant = false;
    for (const Face& h : keep)
      if (g.contains(h)) {
        redundant = true;
        break;
      }
    if (!redundant) keep.push_back(g);
  }
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  gens_ = std::move(keep);
}

std::optional<int> MonomialIdeal::generation_degree() const {
  if (gens_.empty()) return std::nullopt;
  int deg = gens_[0].size();
  for (const Face& g : gens_)
    if (g.size() != deg) return std::nullopt;
  return deg;
}

std::vector<std::string> MonomialIdeal::variable_labels() const {
  std::vector<std::string> labels(n_);
  for (int i = 0; i < n_; ++i) labels[i] = variable(i);
  return labels;
}

std::vector<std::uint64_t> minimal_transversals(std::uint64_t universe,
                                                const std::vector<std::uint64_t>& sets) {
  for (std::uint64_t s : sets)
    if ((s & universe) == 0) return {};  // an unhittable set: no transversal
  std::vector<std::uint64_t> found;
  std::vector<std::uint64_t> pending = sets;

  std::function<void(std::uint64_t, std::size_t)> rec = [&](std::uint64_t chosen, std::size_t from) {
    // Find the first set not yet hit.
    std::uint64_t unhit = 0;
    for (std::size_t i = from; i < pending.size(); ++i) {
      if ((pending[i] & chosen) == 0) {
        unhit = pending[i] & universe;
        break;
      }
    }
    if (unhit == 0) {
      found.push_back(chosen);
      return;
    }
    while (unhit) {
      int v = __builtin_ctzll(unhit);
      unhit &= unhit - 1;
      rec(chosen | (std::uint64_t(1) << v), from);
    }
  };
  rec(0, 0);

  // The branching can emit supersets and duplicates; keep the minimal ones.
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::stable_sort(found.begin(), found.end(), [](std::uint64_t a, std::uint64_t b) {
    return __builtin_popcountll(a) < __builtin_popcountll(b);
  });
  std::vector<std::uint64_t> minimal;
  for (std::uint64_t t : found) {
    bool has_subset = false;
    for (std::uint64_t m : minimal)
      if ((m & ~t) == 0) {
        has_subset = true;
        break;
      }
    if (!has_subset) minimal.push_back(t);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& ideal) {
  int n = ideal.n_variables();
  std::uint64_t universe = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
  std::vector<std::uint64_t> gen_masks;
  for (const Face& g : ideal.generators()) gen_masks.push_back(g.mask());
  // Maximal generator-free sets are the complements of minimal transversals.
  std::vector<Face> facets;
  for (std::uint64_t t : minimal_transversals(universe, gen_masks))
    facets.push_back(Face::from_mask(universe & ~t));
  return SimplicialComplex(n, std::move(facets), ideal.variable_labels());
}

std::vector<Face> minimal_nonfaces(const SimplicialComplex& cx) {
  if (cx.is_void())
    throw precondition_error("minimal_nonfaces: void complex (every set is a non-face)");
  std::uint64_t universe = cx.full_mask();
  // T is a non-face iff it escapes every facet, i.e. hits every facet complement.
  std::vector<std::uint64_t> complements;
  for (const Face& f : cx.facets()) complements.push_back(universe & ~f.mask());
  std::vector<Face> out;
  for (std::uint64_t t : minimal_transversals(universe, complements)) out.push_back(Face::from_mask(t));
  std::sort(out.begin(), out.end());
  return out;
}

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& cx) {
  return MonomialIdeal(cx.n_vertices(), minimal_nonfaces(cx));
}

SimplicialComplex facet_complex(const MonomialIdeal& ideal) {
  return SimplicialComplex(ideal.n_variables(), ideal.generators(), ideal.variable_labels());
}

MonomialIdeal facet_ideal(const SimplicialComplex& cx) {
  return MonomialIdeal(cx.n_vertices(), cx.facets());
}

// --- text format ----------------------------------------------------------

MonomialIdeal parse_ideal(std::istream& in) {
  std::string line;
  int line_no = 0;
  std::vector<Face> gens;
  int max_index = -1;
  while (std::getline(in, line)) {
    ++line_no;
    for (char& c : line)
      if (c == '*') c = ' ';
    std::istringstream ls(line);
    std::string tok;
    std::vector<int> vars;
    bool comment = false;
    while (ls >> tok) {
      if (tok[0] == '#') {
        comment = true;
        break;
      }
      if (tok.size() < 2 || tok[0] != 'x' ||
          !std::all_of(tok.begin() + 1, tok.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw parse_error("expected variable of the form x<index>, got '" + tok + "'", line_no);
      int idx = 0;
      try {
        idx = std::stoi(tok.substr(1));
      } catch (const std::exception&) {
        throw parse_error("variable index out of range: '" + tok + "'", line_no);
      }
      if (idx > 63) throw parse_error("variable index above 63: '" + tok + "'", line_no);
      if (std::find(vars.begin(), vars.end(), idx) != vars.end())
        throw parse_error("monomial is not square-free: repeated '" + tok + "'", line_no);
      vars.push_back(idx);
    }
    (void)comment;
    if (vars.empty()) continue;
    max_index = std::max(max_index, *std::max_element(vars.begin(), vars.end()));
    gens.push_back(Face(std::move(vars)));
  }
  return MonomialIdeal(max_index + 1, std::move(gens));
}

MonomialIdeal parse_ideal_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open ideal file: " + path);
  return parse_ideal(in);
}

std::string serialize_ideal(const MonomialIdeal& ideal) {
  std::string out;
  for (const Face& g : ideal.generators()) {
    bool first = true;
    for (int v : g) {
      if (!first) out += '*';
      out += ideal.variable(v);
      first = false;
    }
    out += '\n';
  }
  return out;
}

}  // namespace chorded
