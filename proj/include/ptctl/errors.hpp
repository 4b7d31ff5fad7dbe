#pragma once

#include <stdexcept>

namespace ptctl {

/// Error raised when a numeric run leaves its validity domain: a state or
/// control became non-finite, a disturbance sample exceeded its declared
/// bound, or an integration produced values the caller cannot trust.
/// The command line tool maps this to exit code 3.
class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Error raised on malformed input artifacts (config files, CSV data).
/// The command line tool maps this to exit code 2.
class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ptctl
