#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "chorded/complex.hpp"
#include "chorded/gf2.hpp"

namespace chorded {

/// A mod-2 chain: a set of d-faces (coefficients are all 1).
struct Chain {
  int dim = -1;
  std::vector<Face> faces;  // canonically sorted support

  Chain() = default;
  Chain(int d, std::vector<Face> fs);
  bool operator==(const Chain&) const = default;
};

/// Mod-2 boundary of a chain: the (d-1)-faces with odd incidence.
Chain boundary(const Chain& c);

/// Matrix of the boundary operator from d-chains to (d-1)-chains: rows are
/// the (d-1)-faces of cx, columns its d-faces, both in lexicographic order.
/// For d = 0 the single row is the reduced augmentation (all ones).
GF2Matrix boundary_matrix(const SimplicialComplex& cx, int d);

/// dim of the reduced homology group over GF(2) in dimension i.  i = -1 is
/// meaningful: it is 1 exactly for the complex {∅} and 0 otherwise.
int reduced_homology_dim(const SimplicialComplex& cx, int i);

/// Witness (d+1)-chain with boundary c, inside the faces of cx, or nullopt.
/// The chain must be a cycle (empty boundary); otherwise precondition_error.
std::optional<Chain> is_boundary(const SimplicialComplex& cx, const Chain& c);

/// Same, restricted to (d+1)-faces of cx whose vertices lie in vertex_mask.
std::optional<Chain> bound_within(const SimplicialComplex& cx, const Chain& c,
                                  std::uint64_t vertex_mask);

/// Repeated boundary solves against one fixed complex and dimension: the face
/// indexing and column data are computed once, then each call solves
/// "boundary(x) = target" over the (d+1)-faces inside a vertex mask.
class BoundarySolver {
 public:
  BoundarySolver(const SimplicialComplex& cx, int d);
  std::optional<Chain> solve(const Chain& target, std::uint64_t vertex_mask) const;

 private:
  int dim_;
  std::vector<Face> rows_;  // d-faces, lexicographic
  std::vector<Face> cols_;  // (d+1)-faces, lexicographic
  std::vector<std::uint64_t> col_masks_;
  std::vector<std::vector<int>> col_rows_;
  std::unordered_map<std::uint64_t, int> row_of_;
};

/// Reduced homology of induced subcomplexes, sharing one global face index
/// per dimension and selecting columns by a vertex mask.  This is the engine
/// behind the 2^n sweeps; building it once amortizes the face enumeration.
class SubsetHomology {
 public:
  explicit SubsetHomology(const SimplicialComplex& cx);

  int max_dim() const { return max_dim_; }
  bool complex_is_void() const { return void_; }

  /// dims[h + 1] = dim reduced H_h of the induced subcomplex on S,
  /// for h in [-1, max_dim].
  std::vector<int> reduced_dims(std::uint64_t vertex_mask) const;

  /// dim reduced H_h of the induced subcomplex on S for a single h.
  int reduced_dim(std::uint64_t vertex_mask, int h) const;

 private:
  struct Level {
    std::vector<std::uint64_t> col_vertex_mask;  // vertices of each d-face
    std::vector<std::vector<int>> col_rows;      // row indices in level d-1
    int n_rows = 0;
  };
  int rank_within(int d, std::uint64_t vertex_mask) const;

  bool void_ = false;
  int max_dim_ = -1;
  std::vector<Level> levels_;  // index d = 0..max_dim
};

}  // namespace chorded
