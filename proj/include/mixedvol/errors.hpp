#pragma once

#include <stdexcept>
#include <string>

namespace mixedvol {

// Finite-difference window was too small even after the configured number
// of doublings; callers may retry with an explicit larger base.
struct NonStabilizedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The saturated ideal of a square system has positive dimension, so the
// torus zero set is not finite and multiplicity counting is undefined.
struct PositiveDimensionalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A hard invariant failed (a root count exceeded its polytope bound).
struct BoundViolationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

inline void internal_check(bool ok, const std::string& msg) {
  if (!ok) throw std::logic_error("internal error: " + msg);
}

}  // namespace mixedvol
