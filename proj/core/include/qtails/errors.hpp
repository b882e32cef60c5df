#pragma once

#include <stdexcept>
#include <string>

namespace qtails {

// Error taxonomy for the exact q-series kernel. Every failure mode that a
// caller can provoke has its own type so tests and the CLI can tell them
// apart without string matching.

struct ArityError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Attempt to invert a series whose constant term is zero.
struct NotAUnit : std::domain_error {
    using std::domain_error::domain_error;
};

// Evaluation of 1/(1 - c q^m) at m = 0, c = 1, or a parameter choice that
// an identity's exclusion list rules out.
struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

// Substitution x := r q^m with m = 0 (would need every coefficient of s).
struct SubstitutionError : std::domain_error {
    using std::domain_error::domain_error;
};

// A formal sum whose terms stopped gaining valuation; usually an identity
// instantiated with a parameter of the wrong kind.
struct NonConvergentSum : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BindingError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct WeightSpecError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Partition enumeration would exceed the configured per-n budget.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IOError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qtails
