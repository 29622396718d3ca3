#pragma once

#include <stdexcept>
#include <string>

namespace tkge {

/// Malformed or inconsistent input data (bad TSV line, vocabulary mismatch, ...).
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid run configuration (bad rank constraint, odd tensor length in strict mode, ...).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Training produced a non-finite quantity.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tkge
