#pragma once

#include <stdexcept>
#include <string>

namespace sfc {

// Malformed or inconsistent user input (bad JSON, unknown node, bad chain).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Label-setting searches require nonnegative arc costs.
class NegativeCostError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A chain function is hosted at zero or several nodes where exactly one is required.
class AmbiguousHostingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The placement target cannot be met even with every candidate virtualized.
class UnachievableTargetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sfc
