#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace multinet {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live in different cyclotomic fields (or one has no field).
class FieldMismatch : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// Syntax error in a field expression; `position()` is a 0-based byte offset.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Rank-deficient or otherwise degenerate geometric input
/// (zero vector, identical lines, collinear points).
class DegenerateInput : public Error {
public:
    using Error::Error;
};

class PreconditionFailed : public Error {
public:
    using Error::Error;
};

/// The sectioning plane is itself one of the planes of Q_n.
class PlaneInArrangement : public Error {
public:
    using Error::Error;
};

/// Multinet condition (i) fails at some point.
class ConditionViolation : public Error {
public:
    using Error::Error;
};

/// Something that is provably impossible happened; indicates an arithmetic bug.
class InternalInconsistency : public Error {
public:
    using Error::Error;
};

/// A JSON document does not follow the interchange schema. `path()` is a JSON pointer.
class SchemaError : public Error {
public:
    SchemaError(const std::string& path, const std::string& what)
        : Error(path + ": " + what), path_(path) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

}  // namespace multinet
