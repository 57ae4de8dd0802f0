#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace morse {

using Vertex = std::uint32_t;

/// A finite set of vertex ids, kept sorted. Ordering is lexicographic on the
/// sorted vertex list. A default-constructed simplex is empty and only serves
/// as a placeholder; every factory below rejects empty input.
class Simplex {
 public:
  Simplex() = default;
  Simplex(std::initializer_list<Vertex> vertices);
  explicit Simplex(std::vector<Vertex> vertices);

  int dim() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
  bool empty() const noexcept { return vertices_.empty(); }
  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  Vertex operator[](std::size_t i) const noexcept { return vertices_[i]; }

  bool is_face_of(const Simplex& other) const;
  /// The faces of codimension one, in lexicographic order.
  std::vector<Simplex> facets() const;
  /// The face obtained by dropping the vertex at position i.
  Simplex without(std::size_t i) const;

  std::string to_string() const;

  auto operator<=>(const Simplex&) const = default;
  bool operator==(const Simplex&) const = default;

 private:
  std::vector<Vertex> vertices_;
};

std::ostream& operator<<(std::ostream& os, const Simplex& s);

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

}  // namespace morse

template <>
struct std::hash<morse::Simplex> : morse::SimplexHash {};
