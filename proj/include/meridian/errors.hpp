#pragma once

#include <stdexcept>
#include <string>

namespace meridian {

/// Base class for all geometric precondition failures.
struct GeomError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Basis handed to gram_schmidt is (numerically) rank deficient; for a patch
/// this signals a non-regular point, W^2 ~ 0.
struct DegenerateBasis : GeomError {
    using GeomError::GeomError;
};

/// Curve point left the unit sphere beyond tolerance.
struct OffSphere : GeomError {
    using GeomError::GeomError;
};

/// Curve is not arc-length parametrized at the queried point.
struct NotUnitSpeed : GeomError {
    using GeomError::GeomError;
};

/// Raw curve speed fell below tolerance; arc-length reparametrization impossible.
struct ZeroSpeed : GeomError {
    using GeomError::GeomError;
};

/// Requested domain crosses a zero of cos(a u + a c1); the circle-arc family
/// is only defined on a single monotone branch.
struct BranchViolation : GeomError {
    using GeomError::GeomError;
};

/// |f'| reached 1 on the requested domain, so (f')^2 + (g')^2 = 1 cannot hold
/// with a real g'.
struct SpeedViolation : GeomError {
    using GeomError::GeomError;
};

/// Patch or profile fails the regularity requirement (W^2 or f too small).
struct NonRegular : GeomError {
    using GeomError::GeomError;
};

/// |g'| vanished on the profile domain; the closed-form meridian pipeline
/// requires g' != 0.
struct GPrimeZero : GeomError {
    using GeomError::GeomError;
};

/// Mean curvature vanished; H_v is singular there and is reported rather
/// than guessed.
struct MinimalPoint : GeomError {
    using GeomError::GeomError;
};

/// Spec-string or expression syntax error.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace meridian
