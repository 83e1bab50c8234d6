#pragma once

#include <stdexcept>
#include <string>

namespace clext {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidParameters : Error {
  using Error::Error;
};

struct UnitarityViolation : Error {
  using Error::Error;
};

struct TruncationTooSmall : Error {
  using Error::Error;
};

// Construction exists in general but not for this parameter pattern.
struct NotApplicable : Error {
  using Error::Error;
};

struct RejectedFamily : Error {
  using Error::Error;
};

struct NoUnirrep : Error {
  using Error::Error;
};

}  // namespace clext
