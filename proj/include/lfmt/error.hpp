#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lfmt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed DSL input. `position()` is the 0-based character offset.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class SingularDivision : public Error {
public:
    using Error::Error;
};

/// Division by an expression the canonical ring cannot invert (sums, cos_alpha).
class UnsupportedDivision : public Error {
public:
    using Error::Error;
};

class RangeError : public Error {
public:
    using Error::Error;
};

class TruncationError : public Error {
public:
    TruncationError(const std::string& message, double last_term_magnitude)
        : Error(message), last_term_magnitude_(last_term_magnitude) {}

    double last_term_magnitude() const noexcept { return last_term_magnitude_; }

private:
    double last_term_magnitude_;
};

class UnboundSymbol : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

/// Input outside the linear J-basis fragment handled by the Gamma-normalized derivative.
class ModeViolation : public Error {
public:
    using Error::Error;
};

/// Structurally invalid field specification document.
class SpecError : public Error {
public:
    using Error::Error;
};

class UnknownIdentity : public Error {
public:
    using Error::Error;
};

}  // namespace lfmt
