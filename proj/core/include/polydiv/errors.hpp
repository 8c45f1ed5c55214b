#pragma once

#include <stdexcept>
#include <string>

namespace polydiv {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Division by the zero polynomial or by a zero scalar.
class ZeroDivisor : public Error {
public:
    explicit ZeroDivisor(const std::string& what = "division by zero")
        : Error(what) {}
};

/// A closed form was asked for a dividend of lower degree than the divisor.
class DegreeTooSmall : public Error {
public:
    using Error::Error;
};

/// An index (matrix order, Hessenberg minor size, sequence length) is outside
/// the admissible range.
class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

/// A configured size cap (matrix order, degree, coefficient bit length) was hit.
class LimitExceeded : public Error {
public:
    using Error::Error;
};

} // namespace polydiv
