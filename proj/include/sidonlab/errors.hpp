#pragma once

#include <stdexcept>
#include <string>

namespace sidonlab {

// Base class for all library errors so callers can catch one type.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPrimeError : Error {
    explicit NotPrimeError(long long p)
        : Error("not a prime: " + std::to_string(p)) {}
};

struct DegreeTooLargeError : Error {
    using Error::Error;
};

struct FieldMismatchError : Error {
    FieldMismatchError() : Error("elements belong to different fields") {}
};

struct ZeroTargetError : Error {
    ZeroTargetError() : Error("discrete log of zero is undefined") {}
};

struct NotPrimitiveError : Error {
    using Error::Error;
};

struct BadSeedError : Error {
    using Error::Error;
};

struct BadCertificateError : Error {
    using Error::Error;
};

struct NotCoprimeError : Error {
    using Error::Error;
};

struct BadEpsilonError : Error {
    using Error::Error;
};

struct ElementOutOfRangeError : Error {
    using Error::Error;
};

struct CapExceededError : Error {
    using Error::Error;
};

struct ZeroElementError : Error {
    using Error::Error;
};

struct TimeBudgetExceededError : Error {
    using Error::Error;
};

struct CheckpointError : Error {
    using Error::Error;
};

}  // namespace sidonlab
