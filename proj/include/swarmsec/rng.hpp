#pragma once

#include <cmath>
#include <cstdint>

// Counter-based random numbers (Philox 4x32, 10 rounds).  Each trial of the
// simulator owns a stream keyed by (seed, trial index); draws inside the
// stream advance a block counter.  Outputs therefore depend only on those
// indices, never on scheduling, which makes multi-threaded runs reproducible
// by construction.

namespace swarmsec {

struct PhiloxBlock {
    std::uint32_t v[4];
};

// One 10-round Philox 4x32 block: four 32-bit words from a 128-bit counter
// and a 64-bit key.
inline PhiloxBlock philox4x32(const std::uint32_t counter[4], const std::uint32_t key[2]) {
    constexpr std::uint32_t kMul0 = 0xD2511F53u;
    constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    constexpr std::uint32_t kBump0 = 0x9E3779B9u;
    constexpr std::uint32_t kBump1 = 0xBB67AE85u;

    std::uint32_t c0 = counter[0];
    std::uint32_t c1 = counter[1];
    std::uint32_t c2 = counter[2];
    std::uint32_t c3 = counter[3];
    std::uint32_t k0 = key[0];
    std::uint32_t k1 = key[1];

    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            k0 += kBump0;
            k1 += kBump1;
        }
        std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * c0;
        std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * c2;
        std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
        std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
        std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
        std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
        c0 = hi1 ^ c1 ^ k0;
        c1 = lo1;
        c2 = hi0 ^ c3 ^ k1;
        c3 = lo0;
    }
    return PhiloxBlock{{c0, c1, c2, c3}};
}

class TrialRng {
  public:
    TrialRng(std::uint64_t seed, std::uint64_t trial) {
        key_[0] = static_cast<std::uint32_t>(seed);
        key_[1] = static_cast<std::uint32_t>(seed >> 32);
        base_[0] = 0;
        base_[1] = static_cast<std::uint32_t>(trial);
        base_[2] = static_cast<std::uint32_t>(trial >> 32);
        base_[3] = 0;
    }

    std::uint64_t next_u64() {
        if (used_ == 2) {
            std::uint32_t ctr[4] = {block_++, base_[1], base_[2], base_[3]};
            cache_ = philox4x32(ctr, key_);
            used_ = 0;
        }
        std::uint64_t hi = cache_.v[2 * used_];
        std::uint64_t lo = cache_.v[2 * used_ + 1];
        ++used_;
        return (hi << 32) | lo;
    }

    // Uniform on [0, 1) with 53 random bits.
    double next_u01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Exponential with the given rate; log1p keeps the draw finite at u = 0.
    double next_exponential(double rate) {
        return -std::log1p(-next_u01()) / rate;
    }

  private:
    std::uint32_t key_[2];
    std::uint32_t base_[4];
    std::uint32_t block_ = 0;
    PhiloxBlock cache_{};
    int used_ = 2;
};

}  // namespace swarmsec
