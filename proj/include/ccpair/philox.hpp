#pragma once

#include <array>
#include <cstdint>

namespace ccpair {

// Philox4x32-10 keyed counter permutation (Salmon, Moraes, Dror, Shaw,
// "Parallel random numbers: as easy as 1, 2, 3", SC'11). Stateless: each
// 128-bit counter value maps to an independent 128-bit output block under a
// 64-bit key, which is what makes seeded runs bit-reproducible and trivially
// shardable.
inline std::array<uint32_t, 4> philox4x32_10(std::array<uint32_t, 4> ctr,
                                             std::array<uint32_t, 2> key) {
    constexpr uint32_t kMul0 = 0xD2511F53u;
    constexpr uint32_t kMul1 = 0xCD9E8D57u;
    constexpr uint32_t kWeyl0 = 0x9E3779B9u;
    constexpr uint32_t kWeyl1 = 0xBB67AE85u;
    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            key[0] += kWeyl0;
            key[1] += kWeyl1;
        }
        uint64_t prod0 = static_cast<uint64_t>(kMul0) * ctr[0];
        uint64_t prod1 = static_cast<uint64_t>(kMul1) * ctr[2];
        uint32_t hi0 = static_cast<uint32_t>(prod0 >> 32), lo0 = static_cast<uint32_t>(prod0);
        uint32_t hi1 = static_cast<uint32_t>(prod1 >> 32), lo1 = static_cast<uint32_t>(prod1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    return ctr;
}

// Stream over the Philox permutation. The 128-bit counter is split into a
// 64-bit unit index (e.g. one unit per Monte Carlo trial) and a 64-bit
// intra-unit block counter, so every unit owns an independent substream of
// 2^64 blocks and workers can be sharded by unit range and merged by
// summation.
class CounterRng {
public:
    explicit CounterRng(uint64_t seed, uint64_t unit = 0)
        : key_{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32)} {
        seek(unit);
    }

    // Jump to the start of a unit's substream.
    void seek(uint64_t unit) {
        unit_ = unit;
        block_ = 0;
        pos_ = 4;
    }

    uint32_t next_u32() {
        if (pos_ == 4) refill();
        return buf_[pos_++];
    }

    uint64_t next_u64() {
        uint64_t lo = next_u32();
        uint64_t hi = next_u32();
        return lo | (hi << 32);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [0, bound), unbiased (rejection sampling).
    uint32_t uniform_below(uint32_t bound) {
        const uint64_t span = uint64_t{1} << 32;
        const uint64_t accept = span - span % bound;
        for (;;) {
            uint32_t r = next_u32();
            if (r < accept) return static_cast<uint32_t>(r % bound);
        }
    }

private:
    void refill() {
        buf_ = philox4x32_10({static_cast<uint32_t>(block_), static_cast<uint32_t>(block_ >> 32),
                              static_cast<uint32_t>(unit_), static_cast<uint32_t>(unit_ >> 32)},
                             key_);
        ++block_;
        pos_ = 0;
    }

    std::array<uint32_t, 2> key_;
    uint64_t unit_ = 0;
    uint64_t block_ = 0;
    std::array<uint32_t, 4> buf_{};
    int pos_ = 4;
};

} // namespace ccpair
