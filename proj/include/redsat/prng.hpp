#pragma once

#include <cassert>
#include <cstdint>

namespace redsat {

// MiniSAT 2.2's pseudo-random number generator, kept bit-exact so that
// randomized reduction strategies reproduce across runs and platforms.
//
// The state is a double holding an integer in (0, 2147483647). One step is
//
//   seed <- seed * 1389796
//   seed <- seed - trunc(seed / 2147483647) * 2147483647
//
// i.e. multiplication modulo the Mersenne prime 2^31-1, with the division
// truncated toward zero. All intermediates stay below 2^53, so the double
// arithmetic is exact and the sequence is identical everywhere.
class MiniSatRng {
  public:
    static constexpr uint32_t kDefaultSeed = 91648253;
    static constexpr double kModulus = 2147483647.0;

    explicit MiniSatRng(uint32_t seed = kDefaultSeed) {
        uint32_t s = seed % 2147483647u;
        if (s == 0) s = kDefaultSeed;
        seed_ = static_cast<double>(s);
    }

    // Uniform real in [0, 1); advances the state by one step.
    double drand() {
        seed_ *= 1389796;
        int q = static_cast<int>(seed_ / kModulus);
        seed_ -= static_cast<double>(q) * kModulus;
        return seed_ / kModulus;
    }

    // Uniform integer in [0, size); consumes exactly one drand step.
    int irand(int size) {
        assert(size >= 1);
        return static_cast<int>(drand() * size);
    }

    double state() const { return seed_; }

  private:
    double seed_;
};

}  // namespace redsat
