#include "charn/rng.hpp"

#include "charn/stats.hpp"

namespace charn {

namespace {
constexpr std::uint32_t kMul0 = 0xd2511f53u;
constexpr std::uint32_t kMul1 = 0xcd9e8d57u;
constexpr std::uint32_t kWeyl0 = 0x9e3779b9u;
constexpr std::uint32_t kWeyl1 = 0xbb67ae85u;
}  // namespace

std::array<std::uint32_t, 4> RandomStream::next_block() noexcept {
    std::array<std::uint32_t, 4> x = {static_cast<std::uint32_t>(counter_),
                                      static_cast<std::uint32_t>(counter_ >> 32), stream_[0],
                                      stream_[1]};
    ++counter_;

    std::uint32_t k0 = key_[0];
    std::uint32_t k1 = key_[1];
    for (int round = 0; round < 10; ++round) {
        if (round != 0) {
            k0 += kWeyl0;
            k1 += kWeyl1;
        }
        const std::uint64_t p0 = static_cast<std::uint64_t>(kMul0) * x[0];
        const std::uint64_t p1 = static_cast<std::uint64_t>(kMul1) * x[2];
        x = {static_cast<std::uint32_t>(p1 >> 32) ^ x[1] ^ k0, static_cast<std::uint32_t>(p1),
             static_cast<std::uint32_t>(p0 >> 32) ^ x[3] ^ k1, static_cast<std::uint32_t>(p0)};
    }
    return x;
}

double RandomStream::next_normal() noexcept { return normal_quantile(next_uniform()); }

}  // namespace charn
