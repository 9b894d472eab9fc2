#pragma once

#include <stdexcept>
#include <string>

namespace evospike {

/// Bad configuration value or malformed command line.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed text input (config file, population archive, CSV).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, long line)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}

    long line() const { return line_; }

private:
    long line_;
};

/// Non-finite state encountered during integration or evaluation.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Genome or phenotype violates a structural invariant.
class StructureError : public std::runtime_error {
public:
    explicit StructureError(const std::string& msg) : std::runtime_error(msg) {}
};

/// System identification could not locate the hover point.
class IdentificationError : public std::runtime_error {
public:
    explicit IdentificationError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace evospike
