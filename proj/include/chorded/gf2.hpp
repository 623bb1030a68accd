#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace chorded {

/// Bit vector over GF(2), packed into 64-bit words.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(int size) : size_(size), w_((size + 63) / 64, 0) {}

  int size() const { return size_; }
  bool get(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i, bool v = true) {
    std::uint64_t bit = std::uint64_t(1) << (i & 63);
    if (v)
      w_[i >> 6] |= bit;
    else
      w_[i >> 6] &= ~bit;
  }
  void flip(int i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

  BitVec& operator^=(const BitVec& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    return *this;
  }

  bool is_zero() const {
    for (auto x : w_)
      if (x) return false;
    return true;
  }
  int popcount() const {
    int c = 0;
    for (auto x : w_) c += __builtin_popcountll(x);
    return c;
  }
  /// True if every set bit of *this is also set in o.
  bool is_subset_of(const BitVec& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }

  bool operator==(const BitVec&) const = default;

  const std::vector<std::uint64_t>& words() const { return w_; }
  std::vector<int> ones() const {
    std::vector<int> out;
    for (int i = 0; i < size_; ++i)
      if (get(i)) out.push_back(i);
    return out;
  }

 private:
  int size_ = 0;
  std::vector<std::uint64_t> w_;
};

/// Dense matrix over the two-element field; rows packed into 64-bit words.
class GF2Matrix {
 public:
  GF2Matrix() = default;
  GF2Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), words_((cols + 63) / 64), d_(std::size_t(rows) * words_, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool get(int r, int c) const { return (d_[std::size_t(r) * words_ + (c >> 6)] >> (c & 63)) & 1u; }
  void set(int r, int c, bool v = true) {
    std::uint64_t bit = std::uint64_t(1) << (c & 63);
    auto& word = d_[std::size_t(r) * words_ + (c >> 6)];
    if (v)
      word |= bit;
    else
      word &= ~bit;
  }

  /// row[dst] ^= row[src]
  void xor_row(int dst, int src) {
    std::uint64_t* a = &d_[std::size_t(dst) * words_];
    const std::uint64_t* b = &d_[std::size_t(src) * words_];
    for (int k = 0; k < words_; ++k) a[k] ^= b[k];
  }
  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int k = 0; k < words_; ++k)
      std::swap(d_[std::size_t(a) * words_ + k], d_[std::size_t(b) * words_ + k]);
  }

  BitVec row_vec(int r) const {
    BitVec v(cols_);
    for (int c = 0; c < cols_; ++c)
      if (get(r, c)) v.set(c);
    return v;
  }

  GF2Matrix transposed() const {
    GF2Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c)
        if (get(r, c)) t.set(c, r);
    return t;
  }

 private:
  int rows_ = 0, cols_ = 0, words_ = 0;
  std::vector<std::uint64_t> d_;
};

/// Rank over GF(2) by row elimination (the argument is taken by value).
int gf2_rank(GF2Matrix m);

/// Basis of the null space {x : Mx = 0}; size is cols - rank.
std::vector<BitVec> gf2_kernel_basis(const GF2Matrix& m);

/// Some x with Mx = b, or nullopt when b is outside the column space.
std::optional<BitVec> gf2_solve(const GF2Matrix& m, const BitVec& b);

}  // namespace chorded
