#pragma once

#include <stdexcept>
#include <string>

namespace scenval {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Points with inconsistent dimensions, or two sets of different dimension.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// A coordinate is NaN or infinite.
class NonFinite : public Error {
public:
    using Error::Error;
};

/// Fewer points than the operation requires (every set needs m >= 2).
class TooSmall : public Error {
public:
    using Error::Error;
};

/// Neighbor depth k exceeds the number of available candidates.
class KTooLarge : public Error {
public:
    using Error::Error;
};

/// The two-sample statistics require equally sized sets.
class UnequalSampleSizes : public Error {
public:
    using Error::Error;
};

/// rho outside (0, 1].
class InvalidRho : public Error {
public:
    using Error::Error;
};

/// Any other parameter outside its documented domain.
class InvalidParameter : public Error {
public:
    using Error::Error;
};

/// Adaptive quadrature exhausted its evaluation budget above tolerance.
class QuadratureNotConverged : public Error {
public:
    using Error::Error;
};

}  // namespace scenval
