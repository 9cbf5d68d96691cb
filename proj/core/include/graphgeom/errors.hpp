#pragma once

#include <stdexcept>
#include <string>

namespace graphgeom {

/// Malformed caller input: bad endpoints, missing labels, invalid probability
/// tables, degenerate label distributions.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid configuration, e.g. positional-encoding dimensions that exceed the
/// available spectrum. A flavor of input error for exit-code purposes.
class ConfigError : public InputError {
public:
    explicit ConfigError(const std::string& what) : InputError(what) {}
};

/// Numerical failure inside a solver (eigensolver non-convergence and similar).
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace graphgeom
