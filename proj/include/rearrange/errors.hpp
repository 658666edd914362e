#pragma once

#include <stdexcept>
#include <string>

namespace rearrange {

// Ties carry probability zero; rather than break them silently we refuse
// the input outright. Exact floating-point equality is the tie test.
struct TieError : std::invalid_argument {
  explicit TieError(const std::string& what) : std::invalid_argument(what) {}
};

// A requested closed-form prediction does not exist for the given kind.
struct NoClosedFormError : std::logic_error {
  explicit NoClosedFormError(const std::string& what)
      : std::logic_error(what) {}
};

// Statistical test invoked with too few trials for its minimum expected
// cell counts.
struct UnderpoweredError : std::runtime_error {
  explicit UnderpoweredError(const std::string& what)
      : std::runtime_error(what) {}
};

// Rejection sampling exceeded its attempt cap; failing loudly beats
// returning a biased sample.
struct RejectionCapError : std::runtime_error {
  explicit RejectionCapError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace rearrange
