#pragma once

#include <stdexcept>
#include <string>

namespace octostokes {

/// Two fields (or a field and a run configuration) disagree on the scalar mode.
class ModeMismatchError : public std::invalid_argument {
public:
    explicit ModeMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

/// Two fields entering one formula carry different lattice constants h.
class LatticeMismatchError : public std::invalid_argument {
public:
    explicit LatticeMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

/// A field file is missing, unreadable, or violates the line-delimited JSON schema.
class FieldIoError : public std::runtime_error {
public:
    explicit FieldIoError(const std::string& what) : std::runtime_error(what) {}
};

/// A run configuration violates its invariants (e.g. exact mode with h != 1).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace octostokes
