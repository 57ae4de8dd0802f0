#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "morse/simplex.hpp"

namespace morse {

/// Index of a face inside one Complex. Ids are dense and ordered by
/// (dimension, lexicographic vertex list).
using FaceId = std::uint32_t;
inline constexpr FaceId kNoFace = std::numeric_limits<FaceId>::max();

/// Immutable, downward-closed finite simplicial complex. Copies share storage.
class Complex {
 public:
  /// The void complex, of dimension -1.
  Complex();

  /// Closure of the given vertex sets. Duplicate vertices inside one facet or
  /// an empty facet raise InvalidFacet.
  static Complex closure(std::span<const Simplex> facets);
  static Complex closure(const std::vector<std::vector<Vertex>>& facets);
  /// Builds a complex from an explicit face list; raises NotAComplex when the
  /// list is not downward closed.
  static Complex from_faces(std::vector<Simplex> faces);

  int dim() const noexcept;
  std::size_t size() const noexcept;
  std::size_t count(int p) const noexcept;
  std::span<const Simplex> faces(int p) const noexcept;
  FaceId first_id(int p) const noexcept;

  const Simplex& face(FaceId id) const { return (*faces_)[id]; }
  int dim_of(FaceId id) const { return (*faces_)[id].dim(); }
  std::optional<FaceId> find(const Simplex& s) const;
  /// Raises NotAFace when s is absent.
  FaceId id_of(const Simplex& s) const;
  bool contains(const Simplex& s) const { return find(s).has_value(); }

  std::span<const FaceId> boundary_ids(FaceId id) const;
  std::span<const FaceId> coboundary_ids(FaceId id) const;
  bool is_facet(FaceId id) const { return coboundary_ids(id).empty(); }

  std::vector<Simplex> facets() const;
  std::span<const Simplex> all_faces() const noexcept { return *faces_; }

  bool operator==(const Complex& other) const;

 private:
  struct Data;
  explicit Complex(std::shared_ptr<const Data> data);
  static Complex build(std::vector<Simplex> sorted_faces);

  std::shared_ptr<const Data> data_;
  const std::vector<Simplex>* faces_;  // into data_, for inline lookups
};

/// A mod-2 chain over face ids: a sorted set, addition is symmetric
/// difference. The ids are relative to some Complex known to the caller.
class IdChain {
 public:
  IdChain() = default;
  /// Each occurrence toggles membership, so repeated ids cancel.
  explicit IdChain(std::vector<FaceId> ids);
  static IdChain single(FaceId id) { IdChain c; c.ids_.push_back(id); return c; }

  bool empty() const noexcept { return ids_.empty(); }
  std::size_t size() const noexcept { return ids_.size(); }
  bool contains(FaceId id) const;
  void toggle(FaceId id);
  const std::vector<FaceId>& ids() const noexcept { return ids_; }
  auto begin() const noexcept { return ids_.begin(); }
  auto end() const noexcept { return ids_.end(); }

  IdChain& operator+=(const IdChain& other);
  friend IdChain operator+(IdChain a, const IdChain& b) { return a += b; }
  bool operator==(const IdChain&) const = default;

 private:
  std::vector<FaceId> ids_;
};

/// A mod-2 chain of simplices, all of one dimension. The empty chain still
/// records its dimension.
class Chain {
 public:
  explicit Chain(int dim = 0) : dim_(dim) {}
  /// Sum of the given simplices; mixed dimensions raise HeterogeneousChain.
  static Chain of(int dim, std::vector<Simplex> simplices);
  static Chain of(std::vector<Simplex> simplices);

  int dim() const noexcept { return dim_; }
  bool empty() const noexcept { return members_.empty(); }
  std::size_t size() const noexcept { return members_.size(); }
  const std::vector<Simplex>& members() const noexcept { return members_; }
  bool contains(const Simplex& s) const;

  Chain& operator+=(const Chain& other);
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  bool operator==(const Chain&) const = default;

 private:
  int dim_;
  std::vector<Simplex> members_;
};

IdChain to_ids(const Complex& k, const Chain& c);
Chain to_chain(const Complex& k, const IdChain& c, int dim);

Chain boundary(const Simplex& s, const Complex& k);
Chain coboundary(const Simplex& s, const Complex& k);
Chain boundary_op(const Chain& c, const Complex& k);
Chain coboundary_op(const Chain& c, const Complex& k);
IdChain boundary_ids(const IdChain& c, const Complex& k);
IdChain coboundary_ids(const IdChain& c, const Complex& k);

/// Pairs (sigma, tau) where tau is the only face of k containing sigma.
std::vector<std::pair<Simplex, Simplex>> free_pairs(const Complex& k);

Complex collapse(const Complex& k, const Simplex& sigma, const Simplex& tau);
Complex expand(const Complex& k, const Simplex& sigma, const Simplex& tau);
Complex perforate(const Complex& k, const Simplex& nu);
Complex fill(const Complex& k, const Simplex& nu);

}  // namespace morse
