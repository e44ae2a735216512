#pragma once

/**
 * @file errors.hpp
 * @brief Exception types raised by the qfe library.
 */

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qfe {

/// Base class for every library error.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

/// Denominator vanishes at the requested specialization point.
class PoleAtPoint : public Error {
public:
    explicit PoleAtPoint(const std::string& where) : Error("pole at point " + where) {}
};

class PartsMismatch : public Error {
public:
    PartsMismatch(long total, long n)
        : Error("multinomial parts sum to " + std::to_string(total) + ", expected " + std::to_string(n)) {}
};

class Unsupported : public Error {
public:
    using Error::Error;
};

class NotInvertible : public Error {
public:
    NotInvertible() : Error("series is not invertible: constant term is zero") {}
};

class OrderTooLow : public Error {
public:
    OrderTooLow(std::size_t order, std::size_t degree)
        : Error("series order " + std::to_string(order) + " is below polynomial degree " +
                std::to_string(degree)) {}
};

/// Rejected field configuration (q a root of unity, lambda = 1, missing values).
class InvalidConfig : public Error {
public:
    using Error::Error;
};

class UnknownIdentity : public Error {
public:
    explicit UnknownIdentity(const std::string& id) : Error("unknown identity: " + id) {}
};

/// Malformed input text; carries the byte offset and the tokens that would have been accepted.
class ParseError : public Error {
public:
    ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& detail = {})
        : Error(build_message(offset, expected, detail)), offset_(offset), expected_(std::move(expected)) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    static std::string build_message(std::size_t offset, const std::vector<std::string>& expected,
                                     const std::string& detail) {
        std::string msg = "parse error at offset " + std::to_string(offset);
        if (!detail.empty()) msg += ": " + detail;
        if (!expected.empty()) {
            msg += "; expected one of:";
            for (const auto& e : expected) msg += " " + e;
        }
        return msg;
    }

    std::size_t offset_;
    std::vector<std::string> expected_;
};

}  // namespace qfe
