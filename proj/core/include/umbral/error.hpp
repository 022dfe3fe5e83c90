#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace umbral {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Precondition violation on an argument (negative k, empty partition, ...).
class ArgumentError : public Error {
public:
    using Error::Error;
};

// Malformed user data: non-unital moment lists, unreadable numbers, bad
// command-line values. The CLI maps these to exit code 1.
class InputError : public ArgumentError {
public:
    using ArgumentError::ArgumentError;
};

// Failures of the calculus itself. The CLI maps these to exit code 2.
class MathError : public Error {
public:
    using Error::Error;
};

// Reciprocal of a series whose constant term is not invertible.
class SingularSeriesError : public MathError {
public:
    using MathError::MathError;
};

// Reversion / compositional inverse of a series or umbra with zero first moment.
class NotInvertibleError : public MathError {
public:
    using MathError::MathError;
};

// Two operands truncated at different orders, or too few moments available.
class OrderMismatchError : public MathError {
public:
    using MathError::MathError;
};

// A dual-path computation disagreed with itself.
class ConsistencyError : public MathError {
public:
    using MathError::MathError;
};

// Unknown or reserved umbra name.
class NameError : public Error {
public:
    using Error::Error;
};

// Reading or writing a file failed. The CLI maps these to exit code 3.
class IoError : public Error {
public:
    using Error::Error;
};

struct SourcePos {
    std::size_t offset = 0; // byte offset, 0-based
    std::size_t line = 1;   // 1-based
    std::size_t column = 1; // 1-based, in bytes
};

// Lexing or parsing failure in the expression language.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& message, SourcePos pos)
        : Error(message + " at line " + std::to_string(pos.line) + ", column " +
                std::to_string(pos.column)),
          pos_(pos), detail_(message) {}

    const SourcePos& pos() const noexcept { return pos_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    SourcePos pos_;
    std::string detail_;
};

} // namespace umbral
