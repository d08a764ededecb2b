#pragma once

#include <array>
#include <cstdint>

namespace prbox {

/// Philox4x32-10 keyed counter permutation: 128-bit counter, 64-bit key,
/// 10 rounds (Salmon et al., "Parallel random numbers: as easy as 1, 2, 3").
inline std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                               std::array<std::uint32_t, 2> key) {
    constexpr std::uint32_t kMul0 = 0xD2511F53u;
    constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
    constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
    constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
    for (int round = 0; round < 10; ++round) {
        const std::uint64_t p0 = std::uint64_t(kMul0) * ctr[0];
        const std::uint64_t p1 = std::uint64_t(kMul1) * ctr[2];
        ctr = {std::uint32_t(p1 >> 32) ^ ctr[1] ^ key[0], std::uint32_t(p1),
               std::uint32_t(p0 >> 32) ^ ctr[3] ^ key[1], std::uint32_t(p0)};
        key[0] += kWeyl0;
        key[1] += kWeyl1;
    }
    return ctr;
}

/// A deterministic random stream addressed by (seed, stream, shot): draw k of
/// shot i is Philox of counter (k, shot_lo, shot_hi, stream) under key seed.
/// Shots can therefore be generated independently and in any order.
class PhiloxRng {
  public:
    PhiloxRng(std::uint64_t seed, std::uint32_t stream, std::uint64_t shot)
        : key_{std::uint32_t(seed), std::uint32_t(seed >> 32)},
          base_{0, std::uint32_t(shot), std::uint32_t(shot >> 32), stream} {}

    std::uint64_t next_u64() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        auto ctr = base_;
        ctr[0] = draw_++;
        const auto block = philox4x32(ctr, key_);
        spare_ = (std::uint64_t(block[3]) << 32) | block[2];
        have_spare_ = true;
        return (std::uint64_t(block[1]) << 32) | block[0];
    }

    /// Uniform double in [0, 1), 53 random bits.
    double next_unit() { return double(next_u64() >> 11) * 0x1.0p-53; }

    int next_bit() { return int(next_u64() & 1u); }

  private:
    std::array<std::uint32_t, 2> key_;
    std::array<std::uint32_t, 4> base_;
    std::uint32_t draw_ = 0;
    std::uint64_t spare_ = 0;
    bool have_spare_ = false;
};

} // namespace prbox
