#include "kacpp/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace kacpp::fft {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;

std::vector<cd> make_twiddles(std::size_t len, int sign) {
    std::vector<cd> t(len / 2);
    for (std::size_t j = 0; j < len / 2; ++j)
        t[j] = std::polar(1.0, sign * 2.0 * kPi * static_cast<double>(j) / static_cast<double>(len));
    return t;
}
} // namespace

std::size_t next_pow2(std::size_t x) {
    std::size_t p = 1;
    while (p < x) p <<= 1;
    return p;
}

Plan::Plan(std::size_t length) : len_(length) {
    if (length == 0) throw std::invalid_argument("fft: zero length");
    pow2_ = is_pow2(length);
    if (pow2_) {
        twiddle_plus_ = make_twiddles(len_, +1);
        twiddle_minus_ = make_twiddles(len_, -1);
        return;
    }
    conv_len_ = next_pow2(2 * len_ - 1);
    conv_twiddle_plus_ = make_twiddles(conv_len_, +1);
    conv_twiddle_minus_ = make_twiddles(conv_len_, -1);

    // chirp_[j] = e^{+i pi j^2 / len}; j^2 taken mod 2*len keeps the argument
    // small, which matters for accuracy once len is ~1e5.
    chirp_.resize(len_);
    const auto mod = static_cast<unsigned long long>(2 * len_);
    for (std::size_t j = 0; j < len_; ++j) {
        const unsigned long long q = (static_cast<unsigned long long>(j) * j) % mod;
        chirp_[j] = std::polar(1.0, kPi * static_cast<double>(q) / static_cast<double>(len_));
    }

    // Transform of the chirp filter b_m = conj-chirp(|m|), wrapped circularly.
    auto build_filter = [&](int sign) {
        std::vector<cd> b(conv_len_, cd(0, 0));
        for (std::size_t m = 0; m < len_; ++m) {
            const cd v = (sign > 0) ? std::conj(chirp_[m]) : chirp_[m];
            b[m] = v;
            if (m) b[conv_len_ - m] = v;
        }
        radix2(b, conv_len_, -1, conv_twiddle_minus_);
        return b;
    };
    filter_plus_ = build_filter(+1);
    filter_minus_ = build_filter(-1);
    scratch_.resize(conv_len_);
}

void Plan::radix2(std::vector<cd>& data, std::size_t len, int sign,
                  const std::vector<cd>& table) const {
    // bit-reversal permutation
    for (std::size_t i = 1, j = 0; i < len; ++i) {
        std::size_t bit = len >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }
    for (std::size_t half = 1; half < len; half <<= 1) {
        const std::size_t stride = len / (2 * half);
        for (std::size_t start = 0; start < len; start += 2 * half) {
            for (std::size_t k = 0; k < half; ++k) {
                const cd w = table[k * stride];
                const cd u = data[start + k];
                const cd v = data[start + k + half] * w;
                data[start + k] = u + v;
                data[start + k + half] = u - v;
            }
        }
    }
    (void)sign;
}

void Plan::bluestein(std::vector<cd>& data, int sign) {
    std::vector<cd>& a = scratch_;
    std::fill(a.begin(), a.end(), cd(0, 0));
    for (std::size_t j = 0; j < len_; ++j) {
        const cd c = (sign > 0) ? chirp_[j] : std::conj(chirp_[j]);
        a[j] = data[j] * c;
    }
    radix2(a, conv_len_, -1, conv_twiddle_minus_);
    const std::vector<cd>& filt = (sign > 0) ? filter_plus_ : filter_minus_;
    for (std::size_t j = 0; j < conv_len_; ++j) a[j] *= filt[j];
    // unnormalized inverse of the forward convolution transform
    radix2(a, conv_len_, +1, conv_twiddle_plus_);
    const double scale = 1.0 / static_cast<double>(conv_len_);
    for (std::size_t k = 0; k < len_; ++k) {
        const cd c = (sign > 0) ? chirp_[k] : std::conj(chirp_[k]);
        data[k] = a[k] * scale * c;
    }
}

void Plan::execute(std::vector<cd>& data, int sign) {
    if (data.size() != len_) throw std::invalid_argument("fft: length mismatch with plan");
    if (pow2_) {
        radix2(data, len_, sign, sign > 0 ? twiddle_plus_ : twiddle_minus_);
    } else {
        bluestein(data, sign);
    }
}

void dft(std::vector<cd>& data, int sign) {
    Plan plan(data.size());
    plan.execute(data, sign);
}

} // namespace kacpp::fft
