#ifndef CLSFORGE_SCALAR_HPP_
#define CLSFORGE_SCALAR_HPP_

#include <cstdint>

#include "clsforge/errors.hpp"

namespace clsforge {

// Modular arithmetic over Z_q for q up to 63 bits.
uint64_t add_mod(uint64_t a, uint64_t b, uint64_t q);
uint64_t sub_mod(uint64_t a, uint64_t b, uint64_t q);
uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t q);
uint64_t pow_mod(uint64_t base, uint64_t e, uint64_t q);
// Extended-Euclid inverse; throws ZeroInverse on a == 0 mod q.
uint64_t inv_mod(uint64_t a, uint64_t q);

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(uint64_t n);

// Field element of Z_q.  The modulus rides along so that values from
// different suites cannot be mixed silently.
struct Scalar {
    uint64_t value = 0;
    uint64_t modulus = 0;

    bool is_zero() const { return value == 0; }
    friend bool operator==(const Scalar&, const Scalar&) = default;
};

Scalar make_scalar(uint64_t value, uint64_t q);

Scalar scalar_add(const Scalar& a, const Scalar& b);
Scalar scalar_sub(const Scalar& a, const Scalar& b);
Scalar scalar_mul(const Scalar& a, const Scalar& b);
Scalar scalar_neg(const Scalar& a);
Scalar scalar_inverse(const Scalar& a);

}  // namespace clsforge

#endif  // CLSFORGE_SCALAR_HPP_
