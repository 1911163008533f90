#pragma once

#include <stdexcept>
#include <string>

namespace hrvae {

// Shape or precondition violation in tensor/layer code.
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Input outside an op's mathematical domain (log of non-positive, NaN/Inf).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Bad experiment configuration (unknown key, unparsable value, missing file).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Checkpoint does not match the requested config/vocab, or is corrupt.
struct MismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Non-finite value where training cannot continue.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hrvae
