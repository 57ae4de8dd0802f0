#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "morse/complex.hpp"

namespace morse {

/// A critical step: the face is added on its own.
struct Fill {
  Simplex face;
  bool operator==(const Fill&) const = default;
};

/// A regular step: the free pair (lower, upper) is added at once.
struct Expand {
  Simplex lower;
  Simplex upper;
  bool operator==(const Expand&) const = default;
};

using MorseItem = std::variant<Fill, Expand>;

/// Dimension of an item: the face of a Fill, the upper face of an Expand.
int item_dim(const MorseItem& item);
bool is_fill(const MorseItem& item);
std::string to_string(const MorseItem& item);

/// An ordered list of fills and expansions that is meant to build `target`
/// from the void complex. Nothing is checked on construction; see validate().
struct MorseSequence {
  Complex target;
  std::vector<MorseItem> items;
};

enum class FaceRole : std::uint8_t { Critical, Lower, Upper };

struct Partition {
  std::vector<Simplex> critical;
  std::vector<Simplex> lower;
  std::vector<Simplex> upper;
};

struct Validation {
  bool ok = false;
  /// Index of the first offending item, or the item count when the replay
  /// ran to completion without covering the target.
  std::optional<std::size_t> failed_item;
  std::string violation;
  Partition partition;  // filled only when ok

  explicit operator bool() const noexcept { return ok; }
};

/// Replays the items from the void complex and reports the first rule that
/// breaks: a simplex outside the target, a face used twice, a fill whose
/// faces are not all present, an expansion that is not a free pair of the
/// result, or a final complex different from the target.
Validation validate(const MorseSequence& seq);

/// A validated sequence resolved against its target's face ids.
class IndexedSequence {
 public:
  struct Step {
    FaceId lower;  // the filled face for a Fill
    FaceId upper;  // kNoFace for a Fill
    bool critical() const noexcept { return upper == kNoFace; }
  };

  /// Raises IllegalMove with the violated rule when seq is not valid.
  explicit IndexedSequence(MorseSequence seq);

  const MorseSequence& sequence() const noexcept { return seq_; }
  const Complex& complex() const noexcept { return seq_.target; }
  std::span<const Step> steps() const noexcept { return steps_; }

  FaceRole role(FaceId id) const { return role_[id]; }
  bool is_critical(FaceId id) const { return role_[id] == FaceRole::Critical; }
  /// Paired face of a regular face, kNoFace for a critical one.
  FaceId partner(FaceId id) const { return partner_[id]; }
  std::size_t step_of(FaceId id) const { return step_of_[id]; }

  /// Critical faces of dimension p in id order.
  const std::vector<FaceId>& critical(int p) const;
  std::vector<std::size_t> critical_counts() const;

 private:
  MorseSequence seq_;
  std::vector<Step> steps_;
  std::vector<FaceRole> role_;
  std::vector<FaceId> partner_;
  std::vector<std::size_t> step_of_;
  std::vector<std::vector<FaceId>> critical_;
};

struct TieBreak {
  enum class Kind { Lex, Seeded };
  Kind kind = Kind::Lex;
  std::uint64_t seed = 0;

  static TieBreak lex() { return {}; }
  static TieBreak seeded(std::uint64_t seed) { return {Kind::Seeded, seed}; }
};

/// Builds k from the void complex, filling only when no expansion is legal.
/// Lex picks the expansion minimizing (dim upper, upper, lower) and the
/// fill candidate of least dimension, then least lexicographically.
MorseSequence increasing_scheme(const Complex& k, TieBreak tie = {});
/// Reduces k to the void complex, perforating only when no collapse is
/// available, and returns the reversed moves. Lex picks the collapse
/// minimizing (dim upper, upper, lower) and the facet of greatest dimension,
/// then least lexicographically.
MorseSequence decreasing_scheme(const Complex& k, TieBreak tie = {});

/// A set of pairs (sigma, tau), sigma a codimension-one face of tau, with
/// every simplex in at most one pair.
class VectorField {
 public:
  using Pair = std::pair<Simplex, Simplex>;

  VectorField() = default;
  /// Raises InvalidField when a pair is malformed or a simplex repeats.
  static VectorField from_pairs(std::vector<Pair> pairs);

  const std::vector<Pair>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  bool contains(const Simplex& sigma, const Simplex& tau) const;
  bool operator==(const VectorField&) const = default;

 private:
  std::vector<Pair> pairs_;  // sorted
};

VectorField gradient_vector_field(const MorseSequence& seq);
/// Raises TargetMismatch when the sequences build different complexes.
bool equivalent(const MorseSequence& a, const MorseSequence& b);

/// True when item dimensions never decrease and a fill is never directly
/// followed by an expansion of the same dimension.
bool is_arranged(const MorseSequence& seq);
/// Adjacent swaps of offending items until none remain. The gradient field
/// is unchanged.
MorseSequence arrange(const MorseSequence& seq);

/// The nested subcomplexes lower(p) and upper(p), p = 0..dim, with
/// lower(p) = {upper-regular faces of dim <= p} + {other faces of dim <= p-1}
/// upper(p) = {critical or upper-regular faces of dim <= p}
///            + {lower-regular faces of dim <= p-1}.
class SkeletonSequence {
 public:
  explicit SkeletonSequence(const IndexedSequence& seq);

  int top() const noexcept { return static_cast<int>(lower_.size()) - 1; }
  const std::vector<bool>& lower_mask(int p) const { return lower_[static_cast<std::size_t>(p)]; }
  const std::vector<bool>& upper_mask(int p) const { return upper_[static_cast<std::size_t>(p)]; }
  /// Materialized as complexes; raises NotAComplex if a mask is not closed.
  Complex lower(int p) const;
  Complex upper(int p) const;

 private:
  Complex k_;
  std::vector<std::vector<bool>> lower_;
  std::vector<std::vector<bool>> upper_;
};

SkeletonSequence skeletons(const IndexedSequence& seq);

struct SkeletonCollapse {
  bool ok = false;
  /// witness[p] lists the collapses taking lower(p+1) onto upper(p).
  std::vector<std::vector<std::pair<Simplex, Simplex>>> witness;
  std::string failure;
};

/// Greedily removes free pairs outside upper(p) from lower(p+1) for every p
/// and reports whether upper(p) is reached each time.
SkeletonCollapse check_skeleton_collapse(const IndexedSequence& seq);

}  // namespace morse
