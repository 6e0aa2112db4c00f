#pragma once

#include <stdexcept>
#include <string>

namespace hyperrough {

// Argument outside the mathematical domain of an operation (t <= 0 for a
// singular kernel, decreasing subordinator path, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A numerical procedure failed to reach its tolerance: series cap, real-part
// violation in the Riccati solver, non-finite intermediate values.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid run configuration; carries the offending field name.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string field, const std::string& message)
        : std::runtime_error(field + ": " + message), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace hyperrough
