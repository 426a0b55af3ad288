#pragma once

#include <stdexcept>
#include <string>

namespace hyperrank {

// Argument outside the mathematical domain of an operation (CLI exit 2).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Problem size beyond a memory or time guard (CLI exit 3).
struct CapacityError : std::length_error {
  using std::length_error::length_error;
};

// Malformed or insufficient input data (CLI exit 2).
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A proved property failed to hold: always a bug.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace hyperrank
