#include "morse/error.hpp"

namespace morse {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidFacet: return "InvalidFacet";
    case ErrorKind::NotAFace: return "NotAFace";
    case ErrorKind::NotAComplex: return "NotAComplex";
    case ErrorKind::HeterogeneousChain: return "HeterogeneousChain";
    case ErrorKind::IllegalMove: return "IllegalMove";
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::NotAChainComplex: return "NotAChainComplex";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::TargetMismatch: return "TargetMismatch";
    case ErrorKind::IterationCap: return "IterationCap";
    case ErrorKind::CyclicField: return "CyclicField";
    case ErrorKind::NotBasic: return "NotBasic";
    case ErrorKind::NotAMorseFunction: return "NotAMorseFunction";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace morse
