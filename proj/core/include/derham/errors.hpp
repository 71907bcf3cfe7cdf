#ifndef DERHAM_ERRORS_HPP
#define DERHAM_ERRORS_HPP

#include <stdexcept>

namespace derham {

/// Input to lift_step did not satisfy f(Y) == 0 mod f^nu.
struct NotALiftError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A proved degree bound failed on computed output. This is a bug, not a
/// user error; bounds are asserted, never clamped.
struct BoundViolation : std::logic_error {
  using std::logic_error::logic_error;
};

} // namespace derham

#endif
