#pragma once

#include <cstdint>
#include <array>

namespace kacpp {

// Philox4x32-10 counter-based generator (Salmon et al., SC 2011).
//
// The output stream is a pure function of (key, stream, position): `key` is
// the experiment master seed, `stream` selects a sub-stream (one per trial,
// or per Monte Carlo block), and the position counter advances as values are
// consumed.  Distinct streams occupy disjoint 128-bit counter blocks by
// construction, so trials can run on any worker in any order and still see
// exactly the same numbers.
class Philox {
public:
    Philox(std::uint64_t key, std::uint64_t stream) noexcept
        : key_(key), stream_(stream), position_(0), have_cached_gauss_(false),
          cached_gauss_(0.0), block_pos_(4) {}

    std::uint64_t key() const noexcept { return key_; }
    std::uint64_t stream() const noexcept { return stream_; }
    std::uint64_t position() const noexcept { return position_; }

    // Raw counter block for the current position: (lo, hi) = (position, stream).
    // Exposed so tests can assert the disjoint-blocks property structurally.
    std::array<std::uint64_t, 2> counter_block() const noexcept { return {position_, stream_}; }

    std::uint32_t next_u32() noexcept {
        if (block_pos_ >= 4) refill();
        return block_[block_pos_++];
    }

    std::uint64_t next_u64() noexcept {
        const std::uint64_t hi = next_u32();
        return (hi << 32) | next_u32();
    }

    // Uniform on [0,1), 53 random bits.
    double next_unit() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller.  Fixed consumption (two uniforms per
    // pair), so streams stay reproducible across platforms.
    double next_gaussian() noexcept;

    // UniformRandomBitGenerator interface.
    using result_type = std::uint64_t;
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type(0); }
    result_type operator()() noexcept { return next_u64(); }

private:
    void refill() noexcept;

    std::uint64_t key_;
    std::uint64_t stream_;
    std::uint64_t position_;   // 128-bit counter = (position_, stream_)
    bool have_cached_gauss_;
    double cached_gauss_;
    std::array<std::uint32_t, 4> block_{};
    unsigned block_pos_;
};

} // namespace kacpp
