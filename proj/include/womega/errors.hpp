#pragma once

#include <stdexcept>
#include <string>

namespace womega {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A cell or diagram was used at a dimension it does not have.
struct DimensionError : Error {
  using Error::Error;
};

// Malformed input. `index` is the failing position when one applies.
struct ValidationError : Error {
  explicit ValidationError(const std::string& what, int index = -1)
      : Error(what), index(index) {}
  int index;
};

// Two boundaries that should agree do not.
struct BoundaryMismatch : Error {
  using Error::Error;
};

// An operation that a realization does not provide.
struct Unsupported : Error {
  using Error::Error;
};

// A computed result contradicts a proven statement. Always a bug.
struct InternalInconsistency : Error {
  using Error::Error;
};

}  // namespace womega
