#include "chorded/gf2.hpp"

#include <stdexcept>

namespace chorded {

int gf2_rank(GF2Matrix m) {
  int rank = 0;
  int rows = m.rows(), cols = m.cols();
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (m.get(r, c)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    m.swap_rows(rank, pivot);
    for (int r = pivot + 1; r < rows; ++r)
      if (m.get(r, c)) m.xor_row(r, rank);
    ++rank;
  }
  return rank;
}

namespace {

// Reduced row echelon form; returns pivot column of each pivot row.
std::vector<int> rref(GF2Matrix& m) {
  std::vector<int> pivot_cols;
  int rows = m.rows(), cols = m.cols();
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (m.get(r, c)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    m.swap_rows(rank, pivot);
    for (int r = 0; r < rows; ++r)
      if (r != rank && m.get(r, c)) m.xor_row(r, rank);
    pivot_cols.push_back(c);
    ++rank;
  }
  return pivot_cols;
}

}  // namespace

std::vector<BitVec> gf2_kernel_basis(const GF2Matrix& m) {
  GF2Matrix w = m;
  std::vector<int> pivot_cols = rref(w);
  int cols = m.cols();
  std::vector<int> pivot_row_of(cols, -1);
  for (std::size_t r = 0; r < pivot_cols.size(); ++r) pivot_row_of[pivot_cols[r]] = static_cast<int>(r);

  std::vector<BitVec> basis;
  for (int f = 0; f < cols; ++f) {
    if (pivot_row_of[f] >= 0) continue;  // pivot column, not free
    BitVec x(cols);
    x.set(f);
    for (std::size_t r = 0; r < pivot_cols.size(); ++r)
      if (w.get(static_cast<int>(r), f)) x.set(pivot_cols[r]);
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<BitVec> gf2_solve(const GF2Matrix& m, const BitVec& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("gf2_solve: dimension mismatch");
  int rows = m.rows(), cols = m.cols();
  GF2Matrix aug(rows, cols + 1);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c)
      if (m.get(r, c)) aug.set(r, c);
    if (b.get(r)) aug.set(r, cols);
  }
  std::vector<int> pivot_cols = rref(aug);
  if (!pivot_cols.empty() && pivot_cols.back() == cols) return std::nullopt;  // inconsistent
  BitVec x(cols);
  for (std::size_t r = 0; r < pivot_cols.size(); ++r)
    if (aug.get(static_cast<int>(r), cols)) x.set(pivot_cols[r]);
  return x;
}

}  // namespace chorded
