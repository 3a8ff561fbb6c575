#pragma once

#include <stdexcept>
#include <string>

namespace kgraphic {

/// Malformed or out-of-range argument (negative degree, bad index, parse error).
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// A construction whose hypotheses do not hold for the given sequence.
class NotApplicable : public std::domain_error {
 public:
  explicit NotApplicable(const std::string& what) : std::domain_error(what) {}
};

/// Input lies outside the range where a characterization is valid
/// (too short, or not graphic).
class OutOfScope : public std::domain_error {
 public:
  explicit OutOfScope(const std::string& what) : std::domain_error(what) {}
};

}  // namespace kgraphic
