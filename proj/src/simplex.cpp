#include "morse/simplex.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "morse/error.hpp"

namespace morse {

namespace {

std::vector<Vertex> normalize(std::vector<Vertex> v) {
  if (v.empty()) throw Error(ErrorKind::InvalidFacet, "empty vertex set");
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end()) {
    throw Error(ErrorKind::InvalidFacet, "repeated vertex");
  }
  return v;
}

}  // namespace

Simplex::Simplex(std::initializer_list<Vertex> vertices)
    : vertices_(normalize(std::vector<Vertex>(vertices))) {}

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(normalize(std::move(vertices))) {}

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                       vertices_.end());
}

Simplex Simplex::without(std::size_t i) const {
  Simplex s;
  s.vertices_.reserve(vertices_.size() - 1);
  for (std::size_t j = 0; j < vertices_.size(); ++j) {
    if (j != i) s.vertices_.push_back(vertices_[j]);
  }
  return s;
}

std::vector<Simplex> Simplex::facets() const {
  std::vector<Simplex> out;
  if (vertices_.size() < 2) return out;
  out.reserve(vertices_.size());
  // Dropping the last vertex first yields lexicographic order.
  for (std::size_t i = vertices_.size(); i-- > 0;) out.push_back(without(i));
  return out;
}

std::string Simplex::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Simplex& s) {
  os << '{';
  for (std::size_t i = 0; i < s.vertices().size(); ++i) {
    if (i) os << ',';
    os << s[i];
  }
  return os << '}';
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Vertex v : s.vertices()) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace morse
