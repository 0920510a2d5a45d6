#ifndef PERIODS_NUMKERNEL_ERRORS_HPP
#define PERIODS_NUMKERNEL_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace periods {

// Input outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Evaluation at a pole (gamma at non-positive integers and the like).
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

// Mathematically meaningful but outside what this implementation covers,
// e.g. a curve with negative discriminant.
class UnsupportedDomainError : public DomainError {
public:
    using DomainError::DomainError;
};

// An iterative procedure missed its accuracy target. Carries the best
// estimate reached and the remaining gap, both as decimal strings.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what, std::string best = {}, std::string gap = {})
        : std::runtime_error(what), best_(std::move(best)), gap_(std::move(gap)) {}

    const std::string& best_estimate() const { return best_; }
    const std::string& gap() const { return gap_; }

private:
    std::string best_;
    std::string gap_;
};

// Parameters too close to a degenerate configuration (Im tau tiny, ...).
class ConditioningError : public NumericError {
public:
    using NumericError::NumericError;
};

// A truncated series did not carry enough terms for the requested coefficient.
class OrderError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace periods

#endif
