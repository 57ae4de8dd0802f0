#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "morse/homology.hpp"
#include "morse/morse_sequence.hpp"

namespace morse {

/// A linear map from chains of a complex to chains of critical faces,
/// stored by its value on every face.
class Frame {
 public:
  Frame() = default;
  Frame(Complex k, std::vector<IdChain> values) : k_(std::move(k)), values_(std::move(values)) {}

  const Complex& complex() const noexcept { return k_; }
  std::size_t size() const noexcept { return values_.size(); }
  const IdChain& operator[](FaceId id) const { return values_[id]; }
  IdChain apply(const IdChain& c) const;

  Chain of(const Simplex& s) const;
  Chain apply(const Chain& c) const;

  bool operator==(const Frame& other) const { return values_ == other.values_; }

 private:
  Complex k_;
  std::vector<IdChain> values_;
};

/// Left-to-right scan: a critical face maps to itself, an upper face to 0,
/// and a lower face sigma of the pair (sigma, tau) to the image of the rest
/// of the boundary of tau.
Frame reference_map(const IndexedSequence& seq);
/// Right-to-left scan: a critical face maps to itself, a lower face to 0,
/// and an upper face tau of (sigma, tau) to the image of the rest of the
/// coboundary of sigma in the whole complex.
Frame coreference_map(const IndexedSequence& seq);

/// Chain complex on the critical faces, with boundary taken through the
/// reference map and coboundary through the coreference map.
class CriticalComplex {
 public:
  CriticalComplex(const IndexedSequence& seq, const Frame& ref, const Frame& coref);

  const Complex& complex() const noexcept { return k_; }
  int top() const noexcept { return static_cast<int>(basis_.size()) - 1; }
  const std::vector<FaceId>& basis(int p) const;
  std::size_t index_of(FaceId critical_face) const { return pos_[critical_face]; }

  IdChain boundary(FaceId kappa) const;
  IdChain coboundary(FaceId kappa) const;
  IdChain boundary(const IdChain& c) const;
  IdChain coboundary(const IdChain& c) const;

  /// boundary_matrix(p): degree p to p-1, columns indexed by basis(p).
  const BitMatrix& boundary_matrix(int p) const { return boundary_[static_cast<std::size_t>(p)]; }
  /// coboundary_matrix(p): degree p to p+1, columns indexed by basis(p).
  const BitMatrix& coboundary_matrix(int p) const { return coboundary_[static_cast<std::size_t>(p)]; }

  PresentedChainComplex presented() const;
  std::vector<std::size_t> betti_numbers() const;
  /// Ranks taken from the coboundary matrices only.
  std::vector<std::size_t> cobetti_numbers() const;

 private:
  Complex k_;
  std::vector<std::vector<FaceId>> basis_;
  std::vector<std::size_t> pos_;
  std::vector<BitMatrix> boundary_;
  std::vector<BitMatrix> coboundary_;
};

CriticalComplex critical_complex(const IndexedSequence& seq, const Frame& ref, const Frame& coref);

/// Number of inputs where boundary-then-reference differs from
/// reference-then-critical-boundary: every face, then `samples` random
/// chains per dimension.
std::size_t chain_map_defect(const IndexedSequence& seq, const Frame& ref,
                             const CriticalComplex& crit, std::size_t samples = 32,
                             std::uint64_t seed = 1);
/// The same comparison for coboundaries and the coreference map.
std::size_t cochain_map_defect(const IndexedSequence& seq, const Frame& coref,
                               const CriticalComplex& crit, std::size_t samples = 32,
                               std::uint64_t seed = 1);

/// sigma lies in the critical boundary of tau exactly when tau lies in the
/// critical coboundary of sigma.
bool duality_check(const CriticalComplex& crit);

}  // namespace morse
