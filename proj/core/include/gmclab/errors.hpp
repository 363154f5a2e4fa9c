#pragma once

#include <stdexcept>
#include <string>

namespace gmclab {

// Bad input: a precondition was violated (pole, strip, cap, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// The numerics could not reach the requested accuracy.
class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string& what, double achieved = -1.0)
        : std::runtime_error(what), achieved_(achieved) {}
    double achieved() const noexcept { return achieved_; }

private:
    double achieved_;
};

}  // namespace gmclab
