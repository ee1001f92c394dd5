#pragma once

#include <stdexcept>
#include <string>

namespace hlg {

/// Unsupported root-system family or rank.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Input outside an operation's domain (non-dominant weight, dimension mismatch, malformed data).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// An exact computation produced an impossible intermediate (e.g. a non-exact division).
class ConsistencyError : public std::logic_error {
public:
    explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace hlg
