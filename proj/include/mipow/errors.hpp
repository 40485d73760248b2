#pragma once

#include <stdexcept>

namespace mipow {

/// Malformed input: mismatched ambient sizes, bad exponents, parse errors.
struct input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The request is well-formed but outside the engine's guarded capabilities
/// (enumeration limits, generator-count limits, unsupported preconditions).
struct capability_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace mipow
