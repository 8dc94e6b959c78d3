#pragma once

#include <stdexcept>
#include <string>

namespace gravent {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An input lies outside the domain of a formula (non-positive mass,
/// non-finite value, negative time, ...). The CLI maps this family to exit 2.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Denominator of the size-corrected potential vanished or went negative.
class SingularityError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Geometric expansion requested at |x| >= 1.
class ConvergenceError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A density matrix has an eigenvalue below the allowed negative floor.
class PositivityError : public DomainError {
public:
    using DomainError::DomainError;
};

/// The quantum correction vanishes, so no finite entangling time exists.
class NoEntanglementError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Malformed or invalid configuration. Carries the line and key when known.
class ConfigError : public Error {
public:
    ConfigError(const std::string& message, std::string key = {}, int line = 0)
        : Error(format(message, key, line)), key_(std::move(key)), line_(line) {}

    const std::string& key() const noexcept { return key_; }
    int line() const noexcept { return line_; }

private:
    static std::string format(const std::string& message, const std::string& key, int line) {
        std::string out;
        if (line > 0) out += "line " + std::to_string(line) + ": ";
        if (!key.empty()) out += "'" + key + "': ";
        return out + message;
    }

    std::string key_;
    int line_;
};

}  // namespace gravent
