#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symroot {

/// Base class for every failure the library reports: contract violations,
/// invalid input data and exceeded desk-scale caps.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// A search or enumeration would exceed its documented size cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

/// An SRS candidate failed one of its defining conditions.
class ValidationError : public Error {
public:
    enum class Kind { shape, span, pairing };

    ValidationError(Kind kind, std::string what, std::size_t p = 0, std::size_t q = 0)
        : Error(std::move(what)), kind_(kind), p_(p), q_(q) {}

    Kind kind() const noexcept { return kind_; }
    // Offending node pair, meaningful for Kind::pairing only.
    std::size_t p() const noexcept { return p_; }
    std::size_t q() const noexcept { return q_; }

private:
    Kind kind_;
    std::size_t p_;
    std::size_t q_;
};

}  // namespace symroot
