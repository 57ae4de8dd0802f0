#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "morse/morse_sequence.hpp"

namespace morse {

/// True when no gradient path of the field on k closes up on itself. Each
/// dimension is checked by a topological sort. Raises NotAFace when a pair
/// is not in k.
bool is_acyclic(const VectorField& v, const Complex& k);

/// A sequence whose gradient field is v. Works top-down: a critical face of
/// top dimension is perforated when one exists, otherwise a free pair of v
/// is found by extending a gradient path backwards and collapsed. Raises
/// CyclicField when the extension runs longer than |k| steps.
MorseSequence vf_to_morse_sequence(const VectorField& v, const Complex& k);

/// Integer values on every face of a complex.
class MorseFunction {
 public:
  MorseFunction() = default;
  MorseFunction(Complex k, std::vector<std::int64_t> values)
      : k_(std::move(k)), values_(std::move(values)) {}

  const Complex& complex() const noexcept { return k_; }
  std::int64_t operator[](FaceId id) const { return values_[id]; }
  std::int64_t operator()(const Simplex& s) const { return values_[k_.id_of(s)]; }
  const std::vector<std::int64_t>& values() const noexcept { return values_; }

 private:
  Complex k_;
  std::vector<std::int64_t> values_;
};

/// f strictly exceeds f on the boundary of each critical face and
/// f(lower) >= f(upper) on each pair.
bool is_morse_function_on_sequence(const MorseFunction& f, const IndexedSequence& seq);
/// f = i on the faces of the i-th item, counting from 1.
MorseFunction canonical_morse_function(const IndexedSequence& seq);

struct BasicCheck {
  bool ok = false;
  std::string violated;  // "monotone", "semi-injective" or "generic"
};

BasicCheck is_basic_morse_function(const MorseFunction& f);
/// Walks the values upwards: one preimage is a fill, two are an expansion.
/// Raises NotBasic naming the first violated property.
MorseSequence basic_function_to_sequence(const MorseFunction& f);

/// Pairs (sigma, tau) with sigma in the boundary of tau and f(sigma) >=
/// f(tau). Raises NotAMorseFunction when a face lies in two pairs.
VectorField gradient_field_of_function(const MorseFunction& f);

bool strongly_equivalent(const MorseFunction& f, const MorseFunction& g);
/// Every face is critical or in a pair with equal values.
bool is_flat(const MorseFunction& f);
/// All critical values are distinct.
bool is_excellent(const MorseFunction& f);

}  // namespace morse
