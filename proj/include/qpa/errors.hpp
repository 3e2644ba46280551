#pragma once

#include <stdexcept>
#include <string>

namespace qpa {

/// Shape or index mismatch between matrix operands.
class DimensionError : public std::invalid_argument {
public:
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Basis fails the matricial-system requirements (unit in span, adjoint closure).
class InvalidSystemError : public std::invalid_argument {
public:
    explicit InvalidSystemError(const std::string& what) : std::invalid_argument(what) {}
};

/// Iterative routine failed to converge or an iterate left its cone.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

/// Input exceeds a documented size cap.
class CapabilityError : public std::invalid_argument {
public:
    explicit CapabilityError(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed file or command-line input.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// An operation was called outside its stated precondition.
class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace qpa
