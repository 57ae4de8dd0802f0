#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "morse/reference_maps.hpp"

namespace morse {

using PathCount = boost::multiprecision::cpp_int;

enum class PathKind { Gradient, Cogradient };

/// Walks of same-dimension faces through the pairs of a gradient field.
/// A gradient step goes from a lower face sigma through its partner tau to
/// another face of tau; a cogradient step goes from a face tau down to some
/// lower face sigma of it and on to the partner of sigma. Only the pairing
/// is used, never the order of the sequence.
class GradientPaths {
 public:
  explicit GradientPaths(const IndexedSequence& seq);

  /// Number of gradient paths from nu to every face of the same dimension
  /// ending at the critical face kappa, indexed by face id (0 elsewhere).
  std::vector<PathCount> gradient_counts_to(FaceId kappa) const;
  /// Number of cogradient paths from the critical face kappa to every face.
  std::vector<PathCount> cogradient_counts_from(FaceId kappa) const;

  PathCount gradient(FaceId nu, FaceId kappa) const { return gradient_counts_to(kappa)[nu]; }
  PathCount cogradient(FaceId kappa, FaceId nu) const { return cogradient_counts_from(kappa)[nu]; }

  /// Gradient successors of nu (empty unless nu is a lower face).
  std::vector<FaceId> gradient_next(FaceId nu) const;
  /// Cogradient successors of nu.
  std::vector<FaceId> cogradient_next(FaceId nu) const;

 private:
  const IndexedSequence& seq_;
};

PathCount count_gradient_paths(const IndexedSequence& seq, FaceId nu, FaceId kappa);
PathCount count_cogradient_paths(const IndexedSequence& seq, FaceId kappa, FaceId nu);

/// kappa is in ref(nu) exactly when the number of gradient paths from nu to
/// kappa is odd; dually for the coreference map. Checked for every face and
/// every critical face of its dimension.
bool frame_parity_check(const IndexedSequence& seq, const Frame& ref, const Frame& coref);

/// Gradient path from nu to kappa with kappa in ref(sigma_i) for every
/// face on it, or cogradient path from kappa to nu with kappa in coref(tau_i)
/// for every face on it.
bool restricted_path_exists(const IndexedSequence& seq, FaceId nu, FaceId kappa, PathKind kind,
                            const Frame& ref, const Frame& coref);

/// A walk of gradient and cogradient steps, listed by the same-dimension
/// faces it visits.
struct CompositePath {
  std::vector<FaceId> faces;
  std::vector<PathKind> steps;  // steps[i] leads from faces[i] to faces[i+1]
};

/// Every composite walk starting at nu that visits a critical face. The walk
/// set is finite; `cap` bounds the output for safety.
std::vector<CompositePath> critical_composite_paths(const IndexedSequence& seq, FaceId nu,
                                                    std::size_t cap = 1u << 20);

/// Maps a critical face kappa to the chain of all faces nu whose coreference
/// (or reference) contains kappa.
class ExtensionMap {
 public:
  ExtensionMap() = default;
  ExtensionMap(Complex k, std::vector<IdChain> values) : k_(std::move(k)), values_(std::move(values)) {}

  const IdChain& operator[](FaceId kappa) const { return values_[kappa]; }
  IdChain apply(const IdChain& critical_chain) const;
  const Complex& complex() const noexcept { return k_; }

 private:
  Complex k_;
  std::vector<IdChain> values_;  // empty for non-critical ids
};

ExtensionMap extension_map(const IndexedSequence& seq, const Frame& coref);
ExtensionMap coextension_map(const IndexedSequence& seq, const Frame& ref);

/// ref(ext(kappa)) == kappa and coref(coext(kappa)) == kappa on every
/// critical face and on random critical chains.
bool retraction_check(const IndexedSequence& seq, const Frame& ref, const Frame& coref,
                      const ExtensionMap& ext, const ExtensionMap& coext, std::size_t samples = 32,
                      std::uint64_t seed = 1);
/// boundary(ext(c)) == ext(critical boundary(c)) and the dual identity for
/// coboundaries.
bool extension_chain_map_check(const IndexedSequence& seq, const CriticalComplex& crit,
                               const ExtensionMap& ext, const ExtensionMap& coext,
                               std::size_t samples = 32, std::uint64_t seed = 1);

/// The discrete gradient flow and its dual.
class FlowOperator {
 public:
  explicit FlowOperator(const IndexedSequence& seq);

  /// Sends a lower face to its partner and everything else to 0.
  IdChain up(const IdChain& c) const;
  /// Sends an upper face to its partner and everything else to 0.
  IdChain down(const IdChain& c) const;
  /// c + boundary(up(c)) + up(boundary(c))
  IdChain apply(const IdChain& c) const;
  /// c + coboundary(down(c)) + down(coboundary(c))
  IdChain coapply(const IdChain& c) const;
  /// Iterates until a fixed point; more than |K| rounds raises IterationCap.
  IdChain stabilize(const IdChain& c) const;
  IdChain costabilize(const IdChain& c) const;

 private:
  const IndexedSequence& seq_;
};

FlowOperator flow(const IndexedSequence& seq);

/// Stabilized flow equals ext(ref(.)), stabilized coflow equals
/// coext(coref(.)), on every face and on random chains.
bool flow_decomposition_check(const IndexedSequence& seq, const Frame& ref, const Frame& coref,
                              const ExtensionMap& ext, const ExtensionMap& coext,
                              std::size_t samples = 32, std::uint64_t seed = 1);

/// The image of an extension map with the ambient boundary (or coboundary),
/// with homology computed from the ambient chains.
struct ExtensionComplex {
  std::vector<std::vector<FaceId>> labels;      // critical faces per degree
  std::vector<std::vector<IdChain>> basis;      // extension chains per degree
  bool independent = false;  // the basis chains are linearly independent
  bool closed = false;       // (co)boundaries stay inside the span
  std::vector<std::size_t> homology;  // betti numbers, or cobetti for the dual
};

ExtensionComplex extension_complex(const IndexedSequence& seq, const ExtensionMap& ext);
ExtensionComplex coextension_complex(const IndexedSequence& seq, const ExtensionMap& coext);

/// Stabilized flow fixes c exactly when c lies in the extension complex.
/// Chains of each degree are enumerated exhaustively when there are at most
/// 2^max_exhaustive_bits of them, and sampled otherwise.
bool flow_fixed_point_check(const IndexedSequence& seq, const ExtensionMap& ext,
                            std::size_t max_exhaustive_bits = 20, std::size_t samples = 256,
                            std::uint64_t seed = 1);

}  // namespace morse
