#include "chorded/face.hpp"

#include <algorithm>

#include "chorded/util.hpp"

namespace chorded {

Face::Face(std::vector<int> vertices) : v_(std::move(vertices)) {
  std::sort(v_.begin(), v_.end());
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (v_[i] < 0) throw precondition_error("Face: negative vertex id");
    if (i > 0 && v_[i] == v_[i - 1]) throw precondition_error("Face: duplicate vertex id");
  }
}

Face Face::from_mask(std::uint64_t mask) {
  std::vector<int> v;
  while (mask) {
    int b = __builtin_ctzll(mask);
    v.push_back(b);
    mask &= mask - 1;
  }
  Face f;
  f.v_ = std::move(v);  // already sorted and distinct
  return f;
}

bool Face::contains(const Face& other) const {
  return std::includes(v_.begin(), v_.end(), other.v_.begin(), other.v_.end());
}

bool Face::contains_vertex(int v) const {
  return std::binary_search(v_.begin(), v_.end(), v);
}

std::uint64_t Face::mask() const {
  std::uint64_t m = 0;
  for (int v : v_) m |= std::uint64_t(1) << v;
  return m;
}

Face Face::with_vertex(int v) const {
  std::vector<int> w = v_;
  w.insert(std::upper_bound(w.begin(), w.end(), v), v);
  return Face(std::move(w));
}

Face Face::without_vertex(int v) const {
  std::vector<int> w;
  w.reserve(v_.size());
  for (int u : v_)
    if (u != v) w.push_back(u);
  Face f;
  f.v_ = std::move(w);
  return f;
}

std::string to_string(const Face& f, const std::vector<std::string>& labels) {
  if (f.empty()) return "{}";
  std::string s;
  bool multi_char = false;
  for (int v : f)
    if (labels[v].size() > 1) multi_char = true;
  for (int v : f) {
    if (multi_char && !s.empty()) s += ' ';
    s += labels[v];
  }
  return s;
}

}  // namespace chorded
