#pragma once

#include <array>
#include <cstdint>

namespace charn {

/// Mixes a 64-bit value through the splitmix64 finalizer. Used to key
/// streams and to hash cell identities; fixed-width arithmetic keeps it
/// identical across platforms.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

constexpr std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t value) noexcept {
    return mix64(seed ^ (value + 0x9e3779b97f4a7c15ull));
}

/// Counter-based random stream (Philox4x32-10). A stream is addressed by a
/// 64-bit key and a 64-bit stream id; draws walk a 64-bit block counter.
/// Distinct (key, stream) pairs yield statistically independent sequences,
/// so parallel replications can each own a stream derived from
/// (master seed, cell, replication index) without any shared state.
class RandomStream {
public:
    RandomStream(std::uint64_t key, std::uint64_t stream) noexcept
        : key_{static_cast<std::uint32_t>(key), static_cast<std::uint32_t>(key >> 32)},
          stream_{static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)} {}

    explicit RandomStream(std::uint64_t seed) noexcept : RandomStream(mix64(seed), 0) {}

    /// Stream for replication `rep` of the cell identified by `cell_hash`
    /// under `master_seed`. A pure function of its arguments.
    static RandomStream derive(std::uint64_t master_seed, std::uint64_t cell_hash,
                               std::uint64_t rep) noexcept {
        return RandomStream(mix64(master_seed ^ mix64(cell_hash)), rep);
    }

    std::uint64_t next_u64() noexcept {
        if (spare_valid_) {
            spare_valid_ = false;
            return spare_;
        }
        const auto block = next_block();
        spare_ = static_cast<std::uint64_t>(block[2]) | (static_cast<std::uint64_t>(block[3]) << 32);
        spare_valid_ = true;
        return static_cast<std::uint64_t>(block[0]) | (static_cast<std::uint64_t>(block[1]) << 32);
    }

    /// Uniform on the open interval (0, 1): 53 random bits offset by half
    /// an ulp, so 0 and 1 are unattainable (safe for quantile inversion).
    double next_uniform() noexcept {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// Standard normal by quantile inversion; exact to double precision.
    double next_normal() noexcept;

private:
    std::array<std::uint32_t, 4> next_block() noexcept;

    std::array<std::uint32_t, 2> key_;
    std::array<std::uint32_t, 2> stream_;
    std::uint64_t counter_ = 0;
    std::uint64_t spare_ = 0;
    bool spare_valid_ = false;
};

}  // namespace charn
