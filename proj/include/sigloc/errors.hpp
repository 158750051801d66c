#pragma once

#include <stdexcept>
#include <string>

namespace sigloc {

/// A denominator (integer, polynomial, or series) that must not be zero is zero.
struct ZeroDenominatorError : std::domain_error {
    explicit ZeroDenominatorError(const std::string& what) : std::domain_error(what) {}
};

/// Inversion of an element that is not a unit in its ring.
struct NonUnitError : std::domain_error {
    explicit NonUnitError(const std::string& what) : std::domain_error(what) {}
};

/// Two ring elements with incompatible generator lists or truncations were combined.
struct RingMismatchError : std::invalid_argument {
    explicit RingMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

/// An evaluation mode that the requested operation does not support.
struct ModeError : std::invalid_argument {
    explicit ModeError(const std::string& what) : std::invalid_argument(what) {}
};

/// A symbolic total that was required to be constant is not.
struct NotRigidError : std::runtime_error {
    std::string function;  // canonical rational-function string of the offending total
    NotRigidError(const std::string& what, std::string fn)
        : std::runtime_error(what), function(std::move(fn)) {}
};

}  // namespace sigloc
