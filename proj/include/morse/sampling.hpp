#pragma once

#include <random>

#include "morse/complex.hpp"

namespace morse {

/// Uniformly random chain of dimension p: each p-face is kept with
/// probability 1/2.
inline IdChain random_chain(const Complex& k, int p, std::mt19937_64& rng) {
  std::vector<FaceId> ids;
  const FaceId lo = k.first_id(p);
  for (std::size_t i = 0; i < k.count(p); ++i) {
    if (rng() & 1u) ids.push_back(lo + static_cast<FaceId>(i));
  }
  return IdChain(std::move(ids));
}

/// Uniformly random sum of the given generators.
inline IdChain random_combination(const std::vector<FaceId>& gens, std::mt19937_64& rng) {
  std::vector<FaceId> ids;
  for (FaceId g : gens) {
    if (rng() & 1u) ids.push_back(g);
  }
  return IdChain(std::move(ids));
}

}  // namespace morse
