#pragma once

#include <stdexcept>
#include <string>

namespace filtval {

// Requested mode needs a capability the instance does not have
// (exhaustive scan on an infinite carrier, exact orbits on samples, ...).
class CapabilityError : public std::runtime_error {
public:
    explicit CapabilityError(const std::string& msg) : std::runtime_error(msg) {}
};

// Element handed to an instance it does not belong to.
class ForeignElement : public std::runtime_error {
public:
    explicit ForeignElement(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid constructor parameter (non-prime modulus, zero truncation, ...).
class BadParameter : public std::runtime_error {
public:
    explicit BadParameter(const std::string& msg) : std::runtime_error(msg) {}
};

// Operation restricted to elements of finite value got an infinite one.
class InfiniteElement : public std::runtime_error {
public:
    explicit InfiniteElement(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed run configuration or element string.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Exact integer arithmetic would leave the representable range.
class OverflowError : public std::runtime_error {
public:
    explicit OverflowError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace filtval
