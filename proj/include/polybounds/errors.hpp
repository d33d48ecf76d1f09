#pragma once

#include <stdexcept>
#include <string>

namespace polybounds {

// Argument outside the domain of the function being evaluated.
struct DomainViolation : std::domain_error {
    explicit DomainViolation(const std::string& what) : std::domain_error(what) {}
};

// Sign resolution (or a verification) ran into the configured precision cap.
struct PrecisionCapExceeded : std::runtime_error {
    explicit PrecisionCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Bound requested at an order below the theorem's minimum.
struct OrderTooSmall : std::invalid_argument {
    explicit OrderTooSmall(const std::string& what) : std::invalid_argument(what) {}
};

// Coefficient list cannot supply the index a construction needs.
struct InsufficientCoefficients : std::invalid_argument {
    explicit InsufficientCoefficients(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace polybounds
