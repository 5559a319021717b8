#ifndef CLSFORGE_ERRORS_HPP_
#define CLSFORGE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace clsforge {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands belong to different groups or different suites.
struct GroupMismatch : Error {
    using Error::Error;
};

// Inverse of zero requested in Z_q.
struct ZeroInverse : Error {
    using Error::Error;
};

// Encoded element/scalar failed to parse (bad tag, out-of-range value,
// wrong suite id).
struct MalformedEncoding : Error {
    using Error::Error;
};

// Input key material fails its own genuineness relation.
struct InvalidInputKey : Error {
    using Error::Error;
};

// Observed signature handed to an attack does not verify.
struct InvalidObservation : Error {
    using Error::Error;
};

// Oracle call not permitted for the adversary's role.
struct RoleViolation : Error {
    using Error::Error;
};

// Oracle payload does not match the challenger's scheme.
struct UnknownScheme : Error {
    using Error::Error;
};

// Challenger query cap exhausted.
struct QueryCapExceeded : Error {
    using Error::Error;
};

// Transcript file does not parse against the schema.
struct SchemaError : Error {
    using Error::Error;
};

// Transcript replay diverged from the recorded run.
struct ReplayMismatch : Error {
    using Error::Error;
};

// Bad run configuration (non-prime order, unknown backend, ...).
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace clsforge

#endif  // CLSFORGE_ERRORS_HPP_
