#pragma once

#include <stdexcept>

namespace ttour {

/// Raised when an instance (or instance file) fails validation. The message
/// starts with the offending field, e.g. "edges[2].cost: negative cost".
class InvalidInstance : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an instance exceeds what an exhaustive routine can enumerate.
class SizeLimitExceeded : public std::length_error {
public:
  using std::length_error::length_error;
};

/// A proven inequality or structural fact failed on a concrete instance.
/// Never expected; it means a bug somewhere in the pipeline.
class CertificateViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace ttour
