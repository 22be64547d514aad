#include "kacpp/prng.hpp"

#include <cmath>

namespace kacpp {

namespace {

constexpr std::uint32_t kWeylA = 0x9E3779B9u;
constexpr std::uint32_t kWeylB = 0xBB67AE85u;
constexpr std::uint32_t kMulA = 0xD2511F53u;
constexpr std::uint32_t kMulB = 0xCD9E8D57u;

inline void mul_hi_lo(std::uint32_t a, std::uint32_t b, std::uint32_t& lo, std::uint32_t& hi) noexcept {
    const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    lo = static_cast<std::uint32_t>(p);
    hi = static_cast<std::uint32_t>(p >> 32);
}

inline void philox_round(std::uint32_t c[4], const std::uint32_t k[2]) noexcept {
    std::uint32_t lo0, hi0, lo1, hi1;
    mul_hi_lo(kMulA, c[0], lo0, hi0);
    mul_hi_lo(kMulB, c[2], lo1, hi1);
    const std::uint32_t r0 = hi1 ^ c[1] ^ k[0];
    const std::uint32_t r1 = lo1;
    const std::uint32_t r2 = hi0 ^ c[3] ^ k[1];
    const std::uint32_t r3 = lo0;
    c[0] = r0; c[1] = r1; c[2] = r2; c[3] = r3;
}

} // namespace

void Philox::refill() noexcept {
    std::uint32_t c[4] = {
        static_cast<std::uint32_t>(position_),
        static_cast<std::uint32_t>(position_ >> 32),
        static_cast<std::uint32_t>(stream_),
        static_cast<std::uint32_t>(stream_ >> 32),
    };
    std::uint32_t k[2] = {
        static_cast<std::uint32_t>(key_),
        static_cast<std::uint32_t>(key_ >> 32),
    };
    for (int r = 0; r < 10; ++r) {
        philox_round(c, k);
        k[0] += kWeylA;
        k[1] += kWeylB;
    }
    block_ = {c[0], c[1], c[2], c[3]};
    block_pos_ = 0;
    ++position_;
}

double Philox::next_gaussian() noexcept {
    if (have_cached_gauss_) {
        have_cached_gauss_ = false;
        return cached_gauss_;
    }
    // u1 in (0,1], u2 in [0,1).
    const double u1 = 1.0 - next_unit();
    const double u2 = next_unit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    cached_gauss_ = r * std::sin(a);
    have_cached_gauss_ = true;
    return r * std::cos(a);
}

} // namespace kacpp
