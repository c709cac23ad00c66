#pragma once

#include <stdexcept>
#include <string>

namespace gcdpairs {

/// An argument violates the documented precondition of an operation.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An exact search was requested above its configured size bound. Callers
/// are expected to fall back to a constructive answer or report "unknown".
class BoundExceeded : public std::runtime_error {
public:
    BoundExceeded(const std::string& what, unsigned long long order, unsigned long long bound)
        : std::runtime_error(what + ": order " + std::to_string(order) + " exceeds exact-search bound " +
                             std::to_string(bound)),
          order_(order), bound_(bound) {}

    unsigned long long order() const noexcept { return order_; }
    unsigned long long bound() const noexcept { return bound_; }

private:
    unsigned long long order_;
    unsigned long long bound_;
};

}  // namespace gcdpairs
