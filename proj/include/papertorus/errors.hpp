#pragma once

#include <stdexcept>
#include <string>

namespace papertorus {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// geometry
struct DegenerateTriangle : Error { using Error::Error; };
struct GeneralPositionFailure : Error { using Error::Error; };
struct NotFlatEnough : Error { using Error::Error; };
struct ChainingFailure : Error { using Error::Error; };

// solver
struct SingularMatrix : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct SamplingExhausted : Error { using Error::Error; };

// certifier
struct InsufficientPrecision : Error { using Error::Error; };
struct NoCertificateFound : Error { using Error::Error; };
struct BoundViolated : Error { using Error::Error; };
struct ChainBroken : Error { using Error::Error; };

// a failed internal consistency check, i.e. a bug, not a math outcome
struct InternalInconsistency : Error { using Error::Error; };

struct ParseError : Error {
  int line;
  ParseError(int line_, const std::string& what_)
      : Error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

}  // namespace papertorus
