#pragma once

#include <stdexcept>
#include <string>

namespace seifert {

// Structural problems: wrong dimensions, out-of-range indices, unresolved
// names. These indicate a malformed request, not a mathematical failure.
struct StructuralFault : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DimensionMismatch : StructuralFault {
    using StructuralFault::StructuralFault;
};

// Reduced-chart components that do not assemble into a valid cyclic
// quotient presentation.
struct InvalidLocalData : std::domain_error {
    using std::domain_error::domain_error;
};

// seifert_is_smooth requires gcd(b_i, c_i) = 1 for every branch fraction.
struct HypothesisNotMet : std::domain_error {
    using std::domain_error::domain_error;
};

// Operation called on Seifert data that has not passed validation.
struct ValidationRequired : std::domain_error {
    using std::domain_error::domain_error;
};

// Operation called outside its stated precondition (e.g. the cone
// construction with a non-positive Chern class).
struct PreconditionFailed : std::domain_error {
    using std::domain_error::domain_error;
};

// Reconstruction refused because uniqueness is not guaranteed.
struct AmbiguityPossible : std::domain_error {
    using std::domain_error::domain_error;
};

// Input document could not be parsed into domain objects.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace seifert
