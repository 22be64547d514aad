#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace kacpp::fft {

using cd = std::complex<double>;

constexpr bool is_pow2(std::size_t x) { return x != 0 && (x & (x - 1)) == 0; }
std::size_t next_pow2(std::size_t x);

// Unnormalized DFT of arbitrary length: data[k] <- sum_j data[j] e^{sign 2 pi i jk/L}.
// Power-of-two lengths run radix-2 Cooley-Tukey directly; anything else goes
// through the Bluestein chirp-z reduction to a padded power-of-two convolution.
void dft(std::vector<cd>& data, int sign);

// Precomputed twiddle/chirp tables for repeated transforms of one length.
// execute() reuses internal scratch, so keep one Plan per thread.
class Plan {
public:
    explicit Plan(std::size_t length);

    std::size_t length() const noexcept { return len_; }
    void execute(std::vector<cd>& data, int sign);

private:
    void radix2(std::vector<cd>& data, std::size_t len, int sign,
                const std::vector<cd>& table) const;
    void bluestein(std::vector<cd>& data, int sign);

    std::size_t len_ = 0;
    bool pow2_ = false;
    std::vector<cd> twiddle_plus_;    // e^{+2 pi i j/len}, j < len/2 (pow2 path)
    std::vector<cd> twiddle_minus_;

    // Bluestein workspace (conv_len_ is a power of two >= 2*len-1)
    std::size_t conv_len_ = 0;
    std::vector<cd> chirp_;           // e^{+i pi j^2 / len}
    std::vector<cd> filter_plus_;     // forward transform of chirp filter, per sign
    std::vector<cd> filter_minus_;
    std::vector<cd> conv_twiddle_plus_;
    std::vector<cd> conv_twiddle_minus_;
    std::vector<cd> scratch_;
};

} // namespace kacpp::fft
