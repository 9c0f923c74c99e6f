#pragma once

#include <stdexcept>
#include <string>

namespace mpj {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when a construction would exceed a configured size cap.
/// `what()` names the cap and, where known, the offending object.
struct CapExceeded : Error {
  using Error::Error;
};

}  // namespace mpj
