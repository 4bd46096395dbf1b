#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mensura {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Unit / dimension expression rejected by the grammar.
class ParseError : public Error {
public:
    enum class Kind { EmptyInput, UnknownToken, MalformedExponent, UnexpectedCharacter };

    ParseError(Kind kind, std::size_t offset, const std::string& what)
        : Error(what + " (byte offset " + std::to_string(offset) + ")"),
          kind_(kind),
          offset_(offset) {}

    Kind kind() const { return kind_; }
    std::size_t offset() const { return offset_; }

private:
    Kind kind_;
    std::size_t offset_;
};

// Operands with incompatible dimensions.
class DimensionError : public Error {
public:
    using Error::Error;
};

// Malformed or missing input data (CSV, dataset contents).
class DataError : public Error {
public:
    using Error::Error;
};

// Numerical preconditions violated: rank deficiency, out-of-range
// parameters, degenerate inputs.
class NumericError : public Error {
public:
    using Error::Error;
};

}  // namespace mensura
