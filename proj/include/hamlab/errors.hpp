#pragma once

#include <stdexcept>
#include <string>

namespace hamlab {

// Invalid model parameters (k, p, c, divisibility, ranges).
class ParameterError : public std::invalid_argument {
public:
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

// An exact procedure was asked to handle an instance above its size guard.
class CapacityError : public std::length_error {
public:
    explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

// A caller-side contract was violated (e.g. lifting a cycle whose star vertex is not a link).
class PreconditionError : public std::logic_error {
public:
    explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

// Malformed serialized input.
class FormatError : public std::runtime_error {
public:
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hamlab
