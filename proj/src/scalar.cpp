#include "clsforge/scalar.hpp"

namespace clsforge {

namespace {

using u128 = unsigned __int128;
using i128 = __int128;

void require_same_modulus(const Scalar& a, const Scalar& b) {
    if (a.modulus != b.modulus) {
        throw GroupMismatch("scalar moduli differ");
    }
}

}  // namespace

uint64_t add_mod(uint64_t a, uint64_t b, uint64_t q) {
    return static_cast<uint64_t>((u128(a) + b) % q);
}

uint64_t sub_mod(uint64_t a, uint64_t b, uint64_t q) {
    return static_cast<uint64_t>((u128(a % q) + q - b % q) % q);
}

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t q) {
    return static_cast<uint64_t>(u128(a) * b % q);
}

uint64_t pow_mod(uint64_t base, uint64_t e, uint64_t q) {
    uint64_t acc = 1 % q;
    base %= q;
    while (e != 0) {
        if (e & 1) acc = mul_mod(acc, base, q);
        base = mul_mod(base, base, q);
        e >>= 1;
    }
    return acc;
}

uint64_t inv_mod(uint64_t a, uint64_t q) {
    a %= q;
    if (a == 0) {
        throw ZeroInverse("zero has no multiplicative inverse");
    }
    // Extended Euclid on (a, q); q prime so gcd is 1.  Coefficients can
    // exceed 64 bits in magnitude for large q, hence the 128-bit walk.
    i128 t = 0, new_t = 1;
    uint64_t r = q, new_r = a;
    while (new_r != 0) {
        uint64_t quot = r / new_r;
        i128 tmp_t = t - i128(quot) * new_t;
        t = new_t;
        new_t = tmp_t;
        uint64_t tmp_r = r - quot * new_r;
        r = new_r;
        new_r = tmp_r;
    }
    if (t < 0) t += q;
    return static_cast<uint64_t>(t);
}

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set decides primality for every n < 2^64.
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = pow_mod(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Scalar make_scalar(uint64_t value, uint64_t q) {
    return Scalar{value % q, q};
}

Scalar scalar_add(const Scalar& a, const Scalar& b) {
    require_same_modulus(a, b);
    return Scalar{add_mod(a.value, b.value, a.modulus), a.modulus};
}

Scalar scalar_sub(const Scalar& a, const Scalar& b) {
    require_same_modulus(a, b);
    return Scalar{sub_mod(a.value, b.value, a.modulus), a.modulus};
}

Scalar scalar_mul(const Scalar& a, const Scalar& b) {
    require_same_modulus(a, b);
    return Scalar{mul_mod(a.value, b.value, a.modulus), a.modulus};
}

Scalar scalar_neg(const Scalar& a) {
    return Scalar{sub_mod(0, a.value, a.modulus), a.modulus};
}

Scalar scalar_inverse(const Scalar& a) {
    return Scalar{inv_mod(a.value, a.modulus), a.modulus};
}

}  // namespace clsforge
