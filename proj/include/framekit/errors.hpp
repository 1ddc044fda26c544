#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace framekit {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// No exact reconstruction was reached within the scan horizon.
class HorizonExceeded : public Error {
public:
    explicit HorizonExceeded(std::int64_t horizon)
        : Error("reconstruction horizon exceeded (N_max = " + std::to_string(horizon) + ")"),
          horizon_(horizon) {}
    std::int64_t horizon() const { return horizon_; }

private:
    std::int64_t horizon_;
};

/// A required dual tail lies outside the representable {0, c, c/n} class.
class UnsupportedTail : public Error {
public:
    using Error::Error;
};

class NotTotal : public Error {
public:
    using Error::Error;
};

class ZeroShift : public Error {
public:
    ZeroShift() : Error("shift vector z0 must be non-zero") {}
};

class ValidationError : public Error {
public:
    ValidationError(std::string field, const std::string& message)
        : Error(field + ": " + message), field_(std::move(field)), message_(message) {}
    const std::string& field() const { return field_; }
    const std::string& message() const { return message_; }

private:
    std::string field_;
    std::string message_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace framekit
