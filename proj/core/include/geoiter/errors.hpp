#pragma once

#include <stdexcept>
#include <string>

namespace geoiter {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a model document cannot be read or decoded.
struct ParseError : Error {
    using Error::Error;
};

// Thrown when structurally well-formed data violates a model invariant.
struct ValidationError : Error {
    using Error::Error;
};

// Thrown by operations that require a positive mean index.
struct MeanIndexNotPositive : Error {
    using Error::Error;
};

// Thrown when the quasi-period scan exhausts its multiplier budget.
struct QuasiPeriodNotFound : Error {
    using Error::Error;
};

// Thrown when a closed-form range claim fails on concrete inputs.
struct RangeClaimViolated : Error {
    using Error::Error;
};

// Thrown when ledger data carries nonzero entries beyond the allowed tail.
struct DJTailNonzero : Error {
    using Error::Error;
};

// Thrown when an identity requires a rational mean index but the model's is not.
struct IrrationalMeanIndex : Error {
    using Error::Error;
};

// Thrown when supplied ledger data is inconsistent with the model.
struct LedgerDataError : Error {
    using Error::Error;
};

} // namespace geoiter
