#pragma once

#include <stdexcept>
#include <string>

namespace framelab {

// Operands built over different charts were mixed.
class ChartMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A point fell outside the declared coordinate domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A frame (or metric) failed its construction-time checks.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A numeric routine failed to reach its tolerance. Carries the error it did achieve.
class NumericError : public std::runtime_error {
public:
    NumericError(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_error_(achieved) {}
    double achieved_error() const { return achieved_error_; }

private:
    double achieved_error_;
};

// Bad CLI flags or config file contents.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace framelab
