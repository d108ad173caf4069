#pragma once

#include <stdexcept>
#include <string>

namespace lielac {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A point transformation maps the requested time slice through the
/// projective singularity |gamma*t + delta| < kSingularTol.
struct SingularTransform : Error {
    using Error::Error;
};

/// Transformed spatial interval collapsed below representable length.
struct DegenerateDomain : Error {
    using Error::Error;
};

/// A finite-difference probe hit a singular or non-finite energy value.
struct NonFiniteEnergy : Error {
    using Error::Error;
};

/// Every optimizer initialization started at a non-finite energy.
struct NoFiniteStart : Error {
    using Error::Error;
};

/// Spectral solver requires a periodic field.
struct NotPeriodic : Error {
    using Error::Error;
};

/// Periodic Cole-Hopf requires a zero-mean initial condition.
struct NonZeroMean : Error {
    using Error::Error;
};

/// Time step violates the stability bound of the scheme.
struct UnstableStep : Error {
    using Error::Error;
};

/// Two fields were expected to live on the same grid.
struct GridMismatch : Error {
    using Error::Error;
};

/// Canonicalization did not reach the operator's supported domain.
struct CanonicalizationFailed : Error {
    using Error::Error;
};

/// Threshold below which |gamma*t + delta| is treated as singular.
inline constexpr double kSingularTol = 1e-6;

} // namespace lielac
