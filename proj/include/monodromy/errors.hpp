#pragma once

#include <stdexcept>
#include <string>

namespace monodromy {

// Raised when an operation receives non-finite input or a wavenumber
// outside its domain (k <= 0 and similar).
class NumericDomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Raised when a matrix fails the canonical-form check; carries the
// residual norm of the violated structure.
class FormViolationError : public std::domain_error {
public:
    FormViolationError(const std::string& what, double residual)
        : std::domain_error(what), residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_ = 0.0;
};

// Invalid stack geometry (negative widths, overlap).
class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid run configuration or unparsable stack description.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A shipped preset failed its own total-width self check.
class PresetIntegrityError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// The interface-matching linear system came out numerically singular.
class IllConditionedError : public std::runtime_error {
public:
    IllConditionedError(const std::string& what, double estimate)
        : std::runtime_error(what), estimate_(estimate) {}
    double condition_estimate() const { return estimate_; }

private:
    double estimate_ = 0.0;
};

} // namespace monodromy
