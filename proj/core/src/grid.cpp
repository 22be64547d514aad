#include "kacpp/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace kacpp {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

double SampleGrid::half_width() const {
    return kPi / (2.0 * static_cast<double>(N));
}

std::int64_t SampleGrid::interval_index(double t) const {
    const double x = t * static_cast<double>(N) / kPi + 0.5;
    const auto a = static_cast<std::int64_t>(std::floor(x));
    if (a < 0) return -1;
    if (a > N) return N + 1;
    return a;
}

bool is_smooth(double t, double gamma, int n, int P_max) {
    const double thresh = gamma / static_cast<double>(n);
    for (int p0 = 1; p0 <= P_max + 1; ++p0) {
        const double x = static_cast<double>(p0) * t / kPi;
        const double d = std::abs(x - std::round(x));
        if (d <= thresh) return false;
    }
    return true;
}

bool is_spread(std::span<const double> ts, double gamma, int n) {
    const double thresh = gamma / static_cast<double>(n);
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (ts[i] < thresh) return false;          // distance to sentinel 0
        if (kPi - ts[i] < thresh) return false;    // distance to sentinel pi
        for (std::size_t j = i + 1; j < ts.size(); ++j)
            if (std::abs(ts[i] - ts[j]) < thresh) return false;
    }
    return true;
}

SampleGrid build_grid(int n, double K0, double kappa, int P_max,
                      std::optional<std::int64_t> N_override) {
    if (n < 16) throw std::invalid_argument("build_grid: n must be >= 16");
    std::int64_t N;
    if (N_override) {
        N = *N_override;
        if (N < 1) throw std::invalid_argument("build_grid: N_override must be >= 1");
    } else {
        const double ln = std::log(static_cast<double>(n));
        N = static_cast<std::int64_t>(
            std::floor(static_cast<double>(n) * static_cast<double>(n) / std::pow(ln, K0)));
        if (N < 4 * static_cast<std::int64_t>(n))
            throw std::invalid_argument(
                "build_grid: N < 4n, linearization regime violated (lower K0 or override N)");
    }

    SampleGrid g;
    g.n = n;
    g.N = N;
    g.K0 = K0;
    g.kappa = kappa;
    g.P_max = P_max;
    g.angles.resize(static_cast<std::size_t>(N) + 1);
    for (std::int64_t a = 0; a <= N; ++a)
        g.angles[static_cast<std::size_t>(a)] = kPi * static_cast<double>(a) / static_cast<double>(N);
    g.angles.back() = kPi;

    const double gamma = std::pow(static_cast<double>(n), kappa);
    g.smooth.resize(static_cast<std::size_t>(N) + 1);
    for (std::int64_t a = 0; a <= N; ++a)
        g.smooth[static_cast<std::size_t>(a)] =
            is_smooth(g.angles[static_cast<std::size_t>(a)], gamma, n, P_max) ? 1 : 0;
    return g;
}

double bad_arc_fraction(const SampleGrid& grid) {
    std::int64_t bad = 0;
    for (auto s : grid.smooth)
        if (!s) ++bad;
    return static_cast<double>(bad) / static_cast<double>(grid.N + 1);
}

} // namespace kacpp
