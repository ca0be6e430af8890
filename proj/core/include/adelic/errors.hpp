#pragma once

#include <stdexcept>
#include <string>

namespace adelic {

// A precondition of an operation was violated by the caller.
// The CLI maps this to exit code 2.
struct ContractViolation : std::invalid_argument {
  explicit ContractViolation(const std::string& what) : std::invalid_argument(what) {}
};

// A computation refused to answer because it could not certify the result at
// the requested window/precision (never silently degraded). Exit code 3.
struct InstabilityError : std::runtime_error {
  explicit InstabilityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace adelic
