#ifndef CLSFORGE_RNG_HPP_
#define CLSFORGE_RNG_HPP_

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "clsforge/group.hpp"

namespace clsforge {

// All randomness flows through this interface so that every run is a
// pure function of its seed and transcripts replay bit for bit.
class RandomSource {
  public:
    virtual ~RandomSource() = default;
    virtual uint64_t next_u64() = 0;
};

// mt19937_64 has a standard-specified output sequence, so seeded runs
// reproduce across platforms and compilers.
class Mt19937Source final : public RandomSource {
  public:
    explicit Mt19937Source(uint64_t seed) : gen_(seed) {}
    uint64_t next_u64() override { return gen_(); }

  private:
    std::mt19937_64 gen_;
};

// Test helper replaying a fixed list of raw draws.
class SequenceSource final : public RandomSource {
  public:
    explicit SequenceSource(std::vector<uint64_t> draws) : draws_(std::move(draws)) {}
    uint64_t next_u64() override;

  private:
    std::vector<uint64_t> draws_;
    size_t next_ = 0;
};

// Unbiased value in [0, n) by rejection sampling.
uint64_t uniform_below(RandomSource& rng, uint64_t n);

// Uniform scalar in [1, q), i.e. a member of Z*_q.
Scalar random_nonzero_scalar(RandomSource& rng, const PairingSuite& suite);

// Stream splitter: derives independent sub-seeds from one run seed.
uint64_t derive_seed(uint64_t seed, uint64_t stream);

}  // namespace clsforge

#endif  // CLSFORGE_RNG_HPP_
