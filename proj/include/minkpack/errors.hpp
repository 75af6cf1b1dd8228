#pragma once

#include <stdexcept>
#include <string>

namespace minkpack {

// Malformed or geometrically invalid input (bad disc, self-intersecting polygon, ...).
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// A numeric argument outside its admissible range.
class RangeError : public std::out_of_range {
 public:
  explicit RangeError(const std::string& what) : std::out_of_range(what) {}
};

// A constructed object failed one of its own invariants.
class InvariantViolation : public std::runtime_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace minkpack
