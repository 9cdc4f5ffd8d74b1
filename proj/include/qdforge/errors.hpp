#pragma once

#include <stdexcept>
#include <string>

namespace qdforge {

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NonFiniteValue : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InvalidBounds : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class EmptyArchive : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DegenerateData : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Rejects a config value; carries the offending field name.
class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string field, const std::string& message)
        : std::runtime_error(field + ": " + message), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

}  // namespace qdforge
