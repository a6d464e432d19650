#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace chemocomp {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Parameters describe a configuration the requested analysis does not cover
/// (asymmetric coefficients, two-mode ties, subcritical bifurcations, ...).
class Unsupported : public Error {
public:
    using Error::Error;
};

/// No positive coexistence state exists (a1*a2 == 1, or one species excluded).
class NoCoexistence : public Error {
public:
    using Error::Error;
};

/// Malformed or invalid scenario configuration. `key()` names the offending
/// entry when there is one.
class ConfigError : public Error {
public:
    ConfigError(std::string key, const std::string& what)
        : Error(key.empty() ? what : key + ": " + what), key_(std::move(key)) {}

    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

/// Base for failures of the numerics themselves; the CLI maps these to exit code 2.
class NumericalFailure : public Error {
public:
    using Error::Error;
};

class SingularSystem : public NumericalFailure {
public:
    using NumericalFailure::NumericalFailure;
};

class NoConvergence : public NumericalFailure {
public:
    NoConvergence(const std::string& what, double residual, long iterations)
        : NumericalFailure(what), residual_(residual), iterations_(iterations) {}

    double residual() const noexcept { return residual_; }
    long iterations() const noexcept { return iterations_; }

private:
    double residual_;
    long iterations_;
};

/// The time stepper produced a density below -tol_neg.
class SchemeFailure : public NumericalFailure {
public:
    using NumericalFailure::NumericalFailure;
};

}  // namespace chemocomp
