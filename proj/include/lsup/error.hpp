#ifndef LSUP_ERROR_HPP
#define LSUP_ERROR_HPP

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace lsup {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class IndexError : public Error {
public:
    using Error::Error;
};

/// A zero divisor was met in Q(theta): the declared minimal polynomial is reducible.
class ReducibleMinpoly : public Error {
public:
    using Error::Error;
};

class FieldMismatch : public Error {
public:
    using Error::Error;
};

/// Jacobi identity failed on basis triple (i, j, k) (0-based); `residual` is printable.
class JacobiViolation : public Error {
public:
    JacobiViolation(std::size_t i, std::size_t j, std::size_t k, std::string residual)
        : Error("Jacobi identity fails on basis triple (" + std::to_string(i + 1) + ", " +
                std::to_string(j + 1) + ", " + std::to_string(k + 1) + "): residual " + residual),
          triple_{i, j, k},
          residual_(std::move(residual)) {}

    const std::array<std::size_t, 3>& triple() const noexcept { return triple_; }
    const std::string& residual() const noexcept { return residual_; }

private:
    std::array<std::size_t, 3> triple_;
    std::string residual_;
};

class NotAnIdeal : public Error {
public:
    using Error::Error;
};

class NotAbelianIdeal : public Error {
public:
    using Error::Error;
};

class NotSolvable : public Error {
public:
    using Error::Error;
};

class NotSemisimple : public Error {
public:
    using Error::Error;
};

class NotSubalgebra : public Error {
public:
    using Error::Error;
};

/// Raised when a post-condition check fails; indicates a bug, not bad input.
class InternalInconsistency : public Error {
public:
    using Error::Error;
};

/// The requested computation is outside what the library decides exactly.
class Unsupported : public Error {
public:
    using Error::Error;
};

class InvalidRank : public Error {
public:
    using Error::Error;
};

class EmptySigma1 : public Error {
public:
    using Error::Error;
};

class InvalidNode : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace lsup

#endif  // LSUP_ERROR_HPP
