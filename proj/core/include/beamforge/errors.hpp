#pragma once

#include <stdexcept>
#include <string>

namespace beamforge {

/// Raised when user-supplied data (parameters, spectra, solutions) breaks an
/// invariant. The CLI maps it to exit code 2.
class ValidationError : public std::invalid_argument {
public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace beamforge
