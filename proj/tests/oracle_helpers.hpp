#ifndef CLSFORGE_TESTS_ORACLE_HELPERS_HPP_
#define CLSFORGE_TESTS_ORACLE_HELPERS_HPP_

#include <cstdint>
#include <stdexcept>

// Test-side modular arithmetic, written from scratch so expected values
// stay independent of the library code paths they are checking.
namespace testoracle {

inline uint64_t mul(uint64_t a, uint64_t b, uint64_t q) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % q);
}

inline uint64_t add(uint64_t a, uint64_t b, uint64_t q) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) + b) % q);
}

inline uint64_t sub(uint64_t a, uint64_t b, uint64_t q) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a % q) + q - b % q) % q);
}

// Inverse by the naive extended Euclid recursion.
inline uint64_t inv(uint64_t a, uint64_t q) {
    a %= q;
    if (a == 0) throw std::invalid_argument("testoracle::inv(0)");
    __int128 old_s = 1, s = 0;
    uint64_t old_r = a, r = q;
    while (r != 0) {
        uint64_t quot = old_r / r;
        uint64_t tmp_r = old_r - quot * r;
        old_r = r;
        r = tmp_r;
        __int128 tmp_s = old_s - static_cast<__int128>(quot) * s;
        old_s = s;
        s = tmp_s;
    }
    if (old_s < 0) old_s += q;
    return static_cast<uint64_t>(old_s);
}

}  // namespace testoracle

#endif  // CLSFORGE_TESTS_ORACLE_HELPERS_HPP_
