#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace morse {

enum class ErrorKind {
  InvalidFacet,
  NotAFace,
  NotAComplex,
  HeterogeneousChain,
  IllegalMove,
  InvalidField,
  NotAChainComplex,
  DegreeMismatch,
  TargetMismatch,
  IterationCap,
  CyclicField,
  NotBasic,
  NotAMorseFunction,
  Parse,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace morse
