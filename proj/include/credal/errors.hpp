#pragma once

#include <stdexcept>
#include <string>

namespace credal {

// Input text could not be read as JSON at all (or the file is unreadable).
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Model data violates a structural requirement (bad intervals, infeasible
// constraints, non-stochastic rows, mismatched dimensions in a file).
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// The request is well-formed but outside the supported regime (state space
// too large for an exhaustive sweep, operation undefined for this model kind).
class unsupported_error : public std::runtime_error {
public:
    explicit unsupported_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace credal
