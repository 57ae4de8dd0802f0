#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "morse/morse_sequence.hpp"

namespace morse {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteOptions {
  std::size_t samples = 32;
  std::uint64_t seed = 1;
  /// Degrees with at most this many faces get exhaustive chain enumeration
  /// in the fixed-point check.
  std::size_t exhaustive_bits = 16;
  /// Composite walks are enumerated only below this many faces.
  std::size_t composite_path_limit = 64;
};

/// Every structural identity the library knows about, evaluated on one
/// validated sequence. Each entry names the property it checks.
std::vector<CheckResult> run_invariant_suite(const IndexedSequence& seq, const SuiteOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace morse
