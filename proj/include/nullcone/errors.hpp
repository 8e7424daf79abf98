#pragma once

#include <stdexcept>
#include <string>

namespace nullcone {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Incompatible matrix shapes or ambient dimensions.
struct DimensionError : Error {
    using Error::Error;
};

/// Symplectic form requested on an odd-dimensional space.
struct ParityError : Error {
    using Error::Error;
};

/// Isotropic subspace of dimension r > floor(n/2) requested.
struct EmptinessError : Error {
    using Error::Error;
};

/// Rank request that no point of the variety can satisfy.
struct RankError : Error {
    using Error::Error;
};

/// Input outside the operation's domain (e.g. a non-null point).
struct DomainError : Error {
    using Error::Error;
};

/// Operation invoked outside the case where it is defined.
struct InvalidRequest : Error {
    using Error::Error;
};

/// Unique-preimage request at a point whose fiber is not a single point.
struct NotUniqueError : Error {
    using Error::Error;
};

/// Bounded random retries exhausted.
struct SampleError : Error {
    using Error::Error;
};

/// Malformed text or JSON input.
struct ParseError : Error {
    using Error::Error;
};

} // namespace nullcone
