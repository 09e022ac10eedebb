#pragma once

#include <stdexcept>
#include <string>

namespace udw {

/// Base class for all library failures.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A kinematic or geometric input that must be > 0 was not.
struct NonPositiveParameter : Error {
  using Error::Error;
};

/// Root scan failed to enclose a sign change that must exist.
struct RootNotBracketed : Error {
  using Error::Error;
};

/// Adaptive quadrature ran out of subdivisions before meeting tolerance.
struct BudgetExhausted : Error {
  using Error::Error;
};

/// Denominator root with |g'| below the degeneracy floor (light-cone tangency).
struct DegeneratePole : Error {
  using Error::Error;
};

/// Principal-value windows around neighbouring poles overlap.
struct WindowOverlap : Error {
  using Error::Error;
};

/// Detector pair with zero separation (identical worldlines).
struct CoincidentDetectors : Error {
  using Error::Error;
};

/// Synchronized-pair operation called with unequal angular velocities.
struct AngularVelocityMismatch : Error {
  using Error::Error;
};

/// Transition probability below the negative-noise floor; upstream quadrature failed.
struct NegativeProbability : Error {
  using Error::Error;
};

/// Successive regulator extrapolants diverge instead of settling.
struct ExtrapolationUnstable : Error {
  using Error::Error;
};

/// Critical-value search interval whose endpoints agree on the predicate.
struct NoTransitionInInterval : Error {
  using Error::Error;
};

/// Malformed configuration file or flag set.
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace udw
