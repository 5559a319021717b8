#include "clsforge/rng.hpp"

#include "clsforge/errors.hpp"

namespace clsforge {

uint64_t SequenceSource::next_u64() {
    if (next_ >= draws_.size()) {
        throw Error("SequenceSource exhausted after " + std::to_string(draws_.size()) + " draws");
    }
    return draws_[next_++];
}

uint64_t uniform_below(RandomSource& rng, uint64_t n) {
    if (n == 0) {
        throw Error("uniform_below(0)");
    }
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    for (;;) {
        uint64_t v = rng.next_u64();
        if (v < limit) {
            return v % n;
        }
    }
}

Scalar random_nonzero_scalar(RandomSource& rng, const PairingSuite& suite) {
    return Scalar{uniform_below(rng, suite.order() - 1) + 1, suite.order()};
}

uint64_t derive_seed(uint64_t seed, uint64_t stream) {
    // splitmix64 finalizer over seed + stream * golden gamma.
    uint64_t z = seed + stream * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace clsforge
