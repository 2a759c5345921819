#pragma once

#include <stdexcept>
#include <string>

namespace parityaug {

// Input violating an operation's preconditions.
struct InvalidInputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structurally broken data: inconsistent rotation system, non-simple face
// walk, bad gadget assembly.
struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Degenerate coordinates: vertex in the relative interior of a segment,
// collinear overlapping segments.
struct DegeneracyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An exhaustive search exceeded its budget.
struct BudgetExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace parityaug
