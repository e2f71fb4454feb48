#pragma once

#include <stdexcept>
#include <string>

namespace gridfe {

/// Malformed input file; message carries file, line and column.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Structurally valid input that violates a dataset invariant
/// (duplicate keys, unknown references).
class IntegrityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid argument to an operation.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Estimation failed (rank deficiency, non-convergence, degenerate inputs).
class EstimationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Synthetic data generation failed (e.g. infeasible dispatch).
class GenerationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad run configuration.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace gridfe
