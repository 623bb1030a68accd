#include "chorded/homology.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "chorded/util.hpp"

namespace chorded {

Chain::Chain(int d, std::vector<Face> fs) : dim(d), faces(std::move(fs)) {
  for (const Face& f : faces)
    if (f.dimension() != d) throw precondition_error("Chain: face of wrong dimension");
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
}

Chain boundary(const Chain& c) {
  if (c.dim < 0) return Chain(c.dim - 1, {});
  if (c.dim == 0) {
    // Reduced convention: the augmentation sends each vertex to the empty face.
    if (c.faces.size() % 2) return Chain(-1, {Face{}});
    return Chain(-1, {});
  }
  std::map<Face, int> count;
  for (const Face& f : c.faces)
    for (int v : f) ++count[f.without_vertex(v)];
  std::vector<Face> odd;
  for (auto& [g, k] : count)
    if (k % 2) odd.push_back(g);
  return Chain(c.dim - 1, std::move(odd));
}

GF2Matrix boundary_matrix(const SimplicialComplex& cx, int d) {
  std::vector<Face> cols = faces_of_dim(cx, d);
  if (d == 0) {
    GF2Matrix m(1, static_cast<int>(cols.size()));
    for (int c = 0; c < m.cols(); ++c) m.set(0, c);
    return m;
  }
  std::vector<Face> rows = faces_of_dim(cx, d - 1);
  std::unordered_map<std::uint64_t, int> row_of;
  for (std::size_t i = 0; i < rows.size(); ++i) row_of[rows[i].mask()] = static_cast<int>(i);
  GF2Matrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (int v : cols[c])
      m.set(row_of.at(cols[c].mask() & ~(std::uint64_t(1) << v)), static_cast<int>(c));
  return m;
}

int reduced_homology_dim(const SimplicialComplex& cx, int i) {
  if (cx.is_void()) return 0;
  if (i < -1) return 0;
  if (i == -1) return cx.is_empty_complex() ? 1 : 0;
  int n_i = static_cast<int>(faces_of_dim(cx, i).size());
  if (n_i == 0) return 0;
  int rank_i = gf2_rank(boundary_matrix(cx, i));
  int rank_up = 0;
  if (!faces_of_dim(cx, i + 1).empty()) rank_up = gf2_rank(boundary_matrix(cx, i + 1));
  return (n_i - rank_i) - rank_up;
}

std::optional<Chain> bound_within(const SimplicialComplex& cx, const Chain& c,
                                  std::uint64_t vertex_mask) {
  int d = c.dim;
  for (const Face& f : c.faces)
    if (!cx.is_face_mask(f.mask()))
      throw precondition_error("bound_within: chain face is not a face of the complex");
  if (!boundary(c).faces.empty())
    throw precondition_error("bound_within: chain is not a cycle");

  std::vector<Face> rows = faces_of_dim(cx, d);
  std::unordered_map<std::uint64_t, int> row_of;
  for (std::size_t i = 0; i < rows.size(); ++i) row_of[rows[i].mask()] = static_cast<int>(i);

  std::vector<Face> cols;
  for (const Face& f : faces_of_dim(cx, d + 1))
    if ((f.mask() & ~vertex_mask) == 0) cols.push_back(f);

  GF2Matrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (int v : cols[j])
      m.set(row_of.at(cols[j].mask() & ~(std::uint64_t(1) << v)), static_cast<int>(j));

  BitVec b(static_cast<int>(rows.size()));
  for (const Face& f : c.faces) b.set(row_of.at(f.mask()));

  std::optional<BitVec> x = gf2_solve(m, b);
  if (!x) return std::nullopt;
  std::vector<Face> support;
  for (int j : x->ones()) support.push_back(cols[j]);
  return Chain(d + 1, std::move(support));
}

std::optional<Chain> is_boundary(const SimplicialComplex& cx, const Chain& c) {
  return bound_within(cx, c, ~std::uint64_t(0));
}

BoundarySolver::BoundarySolver(const SimplicialComplex& cx, int d)
    : dim_(d), rows_(faces_of_dim(cx, d)), cols_(faces_of_dim(cx, d + 1)) {
  row_of_.reserve(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) row_of_[rows_[i].mask()] = static_cast<int>(i);
  col_masks_.reserve(cols_.size());
  col_rows_.reserve(cols_.size());
  for (const Face& f : cols_) {
    col_masks_.push_back(f.mask());
    std::vector<int> rows;
    for (int v : f) rows.push_back(row_of_.at(f.mask() & ~(std::uint64_t(1) << v)));
    col_rows_.push_back(std::move(rows));
  }
}

std::optional<Chain> BoundarySolver::solve(const Chain& target, std::uint64_t vertex_mask) const {
  std::vector<int> active;
  for (std::size_t j = 0; j < cols_.size(); ++j)
    if ((col_masks_[j] & ~vertex_mask) == 0) active.push_back(static_cast<int>(j));

  GF2Matrix m(static_cast<int>(rows_.size()), static_cast<int>(active.size()));
  for (std::size_t j = 0; j < active.size(); ++j)
    for (int r : col_rows_[active[j]]) m.set(r, static_cast<int>(j));

  BitVec b(static_cast<int>(rows_.size()));
  for (const Face& f : target.faces) b.set(row_of_.at(f.mask()));

  std::optional<BitVec> x = gf2_solve(m, b);
  if (!x) return std::nullopt;
  std::vector<Face> support;
  for (int j : x->ones()) support.push_back(cols_[active[j]]);
  return Chain(dim_ + 1, std::move(support));
}

SubsetHomology::SubsetHomology(const SimplicialComplex& cx) {
  void_ = cx.is_void();
  if (void_) return;
  max_dim_ = cx.dim();
  levels_.resize(std::max(0, max_dim_ + 1));
  std::vector<Face> below;  // faces of dimension d-1
  for (int d = 0; d <= max_dim_; ++d) {
    std::vector<Face> faces = faces_of_dim(cx, d);
    Level& lv = levels_[d];
    lv.n_rows = static_cast<int>(below.size());
    std::unordered_map<std::uint64_t, int> row_of;
    for (std::size_t i = 0; i < below.size(); ++i) row_of[below[i].mask()] = static_cast<int>(i);
    for (const Face& f : faces) {
      lv.col_vertex_mask.push_back(f.mask());
      std::vector<int> rows;
      if (d > 0)
        for (int v : f) rows.push_back(row_of.at(f.mask() & ~(std::uint64_t(1) << v)));
      lv.col_rows.push_back(std::move(rows));
    }
    below = std::move(faces);
  }
}

int SubsetHomology::rank_within(int d, std::uint64_t vertex_mask) const {
  if (d < 0 || d > max_dim_) return 0;
  const Level& lv = levels_[d];
  if (d == 0) {
    for (std::uint64_t m : lv.col_vertex_mask)
      if ((m & ~vertex_mask) == 0) return 1;  // augmentation row
    return 0;
  }
  // Greedy column insertion into an echelon basis keyed by leading row.
  int words = (lv.n_rows + 63) / 64;
  std::vector<std::vector<std::uint64_t>> basis(lv.n_rows);
  std::vector<std::uint64_t> col(words);
  int rank = 0;
  for (std::size_t j = 0; j < lv.col_vertex_mask.size(); ++j) {
    if (lv.col_vertex_mask[j] & ~vertex_mask) continue;
    std::fill(col.begin(), col.end(), 0);
    for (int r : lv.col_rows[j]) col[r >> 6] |= std::uint64_t(1) << (r & 63);
    while (true) {
      int lead = -1;
      for (int w = words - 1; w >= 0; --w)
        if (col[w]) {
          lead = (w << 6) + 63 - __builtin_clzll(col[w]);
          break;
        }
      if (lead < 0) break;
      if (basis[lead].empty()) {
        basis[lead] = col;
        ++rank;
        break;
      }
      const auto& piv = basis[lead];
      for (int w = 0; w < words; ++w) col[w] ^= piv[w];
    }
  }
  return rank;
}

std::vector<int> SubsetHomology::reduced_dims(std::uint64_t vertex_mask) const {
  std::vector<int> dims(std::max(0, max_dim_ + 1) + 1, 0);
  if (void_) return dims;
  // ranks[d] = rank of the boundary map out of d-chains, restricted to S.
  std::vector<int> ranks(max_dim_ + 2, 0);
  std::vector<int> counts(max_dim_ + 1, 0);
  for (int d = 0; d <= max_dim_; ++d) {
    const Level& lv = levels_[d];
    for (std::uint64_t m : lv.col_vertex_mask)
      if ((m & ~vertex_mask) == 0) ++counts[d];
    ranks[d] = rank_within(d, vertex_mask);
  }
  // h = -1: C_{-1} is k (the empty face is always present in a non-void complex).
  dims[0] = 1 - ranks[0];
  for (int h = 0; h <= max_dim_; ++h) {
    int kernel = counts[h] - ranks[h];
    int rank_up = h + 1 <= max_dim_ ? ranks[h + 1] : 0;
    dims[h + 1] = kernel - rank_up;
  }
  return dims;
}

int SubsetHomology::reduced_dim(std::uint64_t vertex_mask, int h) const {
  if (void_ || h < -1 || h > max_dim_) return 0;
  std::vector<int> dims = reduced_dims(vertex_mask);
  return dims[h + 1];
}

}  // namespace chorded
