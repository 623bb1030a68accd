#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "chorded/face.hpp"

namespace chorded {

/// An abstract simplicial complex in facet-list form.  Vertices are dense ids
/// 0..n-1 with display labels; a set is a face iff it is contained in some
/// facet.  Two degenerate values are distinguished: the void complex (no faces
/// at all, facet list empty) and the complex {∅} (the empty face alone).
class SimplicialComplex {
 public:
  SimplicialComplex() = default;  // void complex on 0 vertices
  SimplicialComplex(int n_vertices, std::vector<Face> facets,
                    std::vector<std::string> labels = {});

  static SimplicialComplex void_complex(int n_vertices, std::vector<std::string> labels = {});
  /// The complex {∅}: one empty face and nothing else.
  static SimplicialComplex empty_complex(int n_vertices, std::vector<std::string> labels = {});

  int n_vertices() const { return n_; }
  const std::vector<Face>& facets() const { return facets_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_[v]; }

  bool is_void() const { return facets_.empty(); }
  /// True for the complex {∅}.
  bool is_empty_complex() const { return facets_.size() == 1 && facets_[0].empty(); }

  /// Dimension of the complex: max facet dimension; -1 for {∅}.
  /// Throws precondition_error on the void complex, which has no dimension.
  int dim() const;
  bool is_pure() const;

  bool is_face(const Face& f) const;
  bool is_face_mask(std::uint64_t m) const;

  /// Union of all facet masks (the vertices actually used by some face).
  std::uint64_t support_mask() const;
  int support_size() const;
  std::uint64_t full_mask() const;  // all of 0..n-1

  bool operator==(const SimplicialComplex& o) const {
    return n_ == o.n_ && facets_ == o.facets_;
  }

  std::string facet_string() const;  // e.g. <abc, abd, ae>

 private:
  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<Face> facets_;  // antichain, lexicographically sorted
};

/// All d-dimensional faces, in lexicographic order.  Empty when none exist.
std::vector<Face> faces_of_dim(const SimplicialComplex& cx, int d);

/// Complex generated by the d-faces.  Throws precondition_error when the
/// complex has no d-faces (the skeleton would be empty).
SimplicialComplex pure_skeleton(const SimplicialComplex& cx, int d);

/// Facets are the (d+1)-subsets of the full vertex set 0..n-1 that are not
/// faces; void when every (d+1)-subset is a face.
SimplicialComplex d_complement(const SimplicialComplex& cx, int d);

/// Faces of cx contained in the vertex set S.
SimplicialComplex induced_subcomplex(const SimplicialComplex& cx, std::uint64_t vertex_mask);
SimplicialComplex induced_subcomplex(const SimplicialComplex& cx, const std::vector<int>& vertices);

/// d-closure of a pure d-dimensional complex: keeps its d-faces, adds every
/// set of at most d vertices, and fills each larger set all of whose
/// (d+1)-subsets are d-faces.  d defaults to dim(cx); passing it explicitly
/// also admits the void complex (closure is then the complete (d-1)-skeleton).
SimplicialComplex d_closure(const SimplicialComplex& cx, int d = -1);

/// Maximal d-path-connected subcomplexes of a pure d-complex: components of
/// the dual graph whose edges join d-faces sharing a (d-1)-face.
std::vector<SimplicialComplex> path_components(const SimplicialComplex& cx);

/// Every (d+1)-subset of S is a face of cx.
bool is_d_complete(const SimplicialComplex& cx, int d, std::uint64_t vertex_mask);
/// Same, with S = the support of cx.
bool is_d_complete(const SimplicialComplex& cx, int d);

/// Cone over cx with a fresh apex vertex appended (id n).
SimplicialComplex cone(const SimplicialComplex& cx, const std::string& apex_label = "");

// --- text format ----------------------------------------------------------
//
// One facet per line, vertices as whitespace-separated label tokens; lines
// beginning with '#' are ignored.  Canonical output sorts vertices within a
// face and faces lexicographically.

SimplicialComplex parse_complex(std::istream& in);
SimplicialComplex parse_complex_file(const std::string& path);
std::string serialize_complex(const SimplicialComplex& cx);

}  // namespace chorded
