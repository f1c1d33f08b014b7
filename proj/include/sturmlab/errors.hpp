#pragma once

#include <stdexcept>
#include <string>

namespace sturmlab {

// A theorem hypothesis does not hold for the requested input (for example an
// arc shorter than 1/2 handed to the hitting experiment). The CLI maps this to
// exit code 3.
class HypothesisError : public std::invalid_argument {
 public:
  explicit HypothesisError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when a computed invariant that must hold unconditionally fails, e.g.
// a Sturmian window with nonzero base energy. Exit code 4.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// Integer coefficients left the range of the 128-bit exact kernel.
class ExactRangeError : public std::overflow_error {
 public:
  explicit ExactRangeError(const std::string& what) : std::overflow_error(what) {}
};

}  // namespace sturmlab
