#pragma once

// Exception types thrown by the germ library. Everything derives from
// germ::Error so callers can catch the whole family in one place.

#include <cstddef>
#include <stdexcept>
#include <string>

namespace germ {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class ZeroPolynomial : public Error {
public:
    using Error::Error;
};

/// A precondition on the numeric content of an argument failed
/// (e.g. a germ that should vanish at the origin does not).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

class NotAUnit : public Error {
public:
    using Error::Error;
};

class NotRegular : public Error {
public:
    using Error::Error;
};

class OrderTooSmall : public Error {
public:
    using Error::Error;
};

class ShearExhausted : public NotRegular {
public:
    using NotRegular::NotRegular;
};

class DegreeZero : public Error {
public:
    using Error::Error;
};

class DegreeTooSmall : public Error {
public:
    using Error::Error;
};

class NonConstantLeadingCoefficient : public Error {
public:
    using Error::Error;
};

class InexactDivision : public Error {
public:
    using Error::Error;
};

/// Raised by newton_polygon when the distinguished variable divides w.
class DistinguishedVarDividesError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t position, std::string expected, std::string found)
        : Error(describe(position, expected, found)),
          position_(position),
          expected_(std::move(expected)),
          found_(std::move(found)) {}

    std::size_t position() const noexcept { return position_; }
    const std::string& expected() const noexcept { return expected_; }
    const std::string& found() const noexcept { return found_; }

private:
    static std::string describe(std::size_t position, const std::string& expected,
                                const std::string& found) {
        return "parse error at offset " + std::to_string(position) + ": expected " +
               expected + ", found " + (found.empty() ? "end of input" : "'" + found + "'");
    }

    std::size_t position_;
    std::string expected_;
    std::string found_;
};

class UnknownVariable : public ParseError {
public:
    using ParseError::ParseError;
};

}  // namespace germ
