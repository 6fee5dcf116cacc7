#pragma once

#include <stdexcept>
#include <string>

namespace revivals {

/// Invalid input: malformed loop, out-of-range parameter, bad config.
/// Maps to CLI exit status 1.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A numerical contract could not be honoured (search bound exceeded,
/// truncation too small, runtime invariant failed). CLI exit status 2.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Config-file problem, carrying the JSON path of the offending field.
class ConfigError : public ValidationError {
public:
    ConfigError(std::string field, const std::string& what)
        : ValidationError(field + ": " + what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

}  // namespace revivals
