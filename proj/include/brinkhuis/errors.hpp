// errors.hpp -- exception types thrown by the brinkhuis library

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace brinkhuis {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A character outside {0,1,2} (plus ignorable whitespace) was encountered.
// Line and column are 1-based; line is 0 when the text did not come from a file.
class InvalidSymbol : public Error {
public:
    InvalidSymbol(const std::string& what, std::size_t line, std::size_t column)
      : Error(what), line_(line), column_(column) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class EmptyFile : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

// Malformed structured input (edges files, checkpoints).
class FormatError : public Error {
public:
    using Error::Error;
};

// Grimm classes need room for the 6-symbol prefix and suffix.
class LengthTooSmall : public Error {
public:
    using Error::Error;
};

class NotSquarefree : public Error {
public:
    using Error::Error;
};

class PreconditionViolated : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

// Refusal to materialize an exponentially large result.
class ResourceLimit : public Error {
public:
    using Error::Error;
};

} // namespace brinkhuis
