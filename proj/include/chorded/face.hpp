#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace chorded {

/// A face of a simplicial complex: an immutable, strictly increasing sequence
/// of vertex ids.  The default-constructed Face is the empty face (dimension -1).
class Face {
 public:
  Face() = default;
  explicit Face(std::vector<int> vertices);
  static Face from_mask(std::uint64_t mask);

  int size() const { return static_cast<int>(v_.size()); }
  int dimension() const { return static_cast<int>(v_.size()) - 1; }
  bool empty() const { return v_.empty(); }

  /// other is a subset of this face.
  bool contains(const Face& other) const;
  bool contains_vertex(int v) const;

  std::uint64_t mask() const;
  Face with_vertex(int v) const;
  Face without_vertex(int v) const;

  const std::vector<int>& vertices() const { return v_; }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }

  friend auto operator<=>(const Face&, const Face&) = default;

 private:
  std::vector<int> v_;
};

std::string to_string(const Face& f, const std::vector<std::string>& labels);

}  // namespace chorded
