#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace kacpp {

// Uniform sampling grid theta_a = pi a / N, a = 0..N, with per-angle
// smooth/bad classification.  Immutable after construction; share freely
// across workers.
struct SampleGrid {
    int n = 0;                 // polynomial degree the grid was built for
    std::int64_t N = 0;        // grid size (N+1 angles)
    double K0 = 0;             // exponent in N = floor(n^2 / log^K0 n)
    double kappa = 0;          // smoothness exponent (gamma = n^kappa)
    int P_max = 0;             // multiples 1..P_max+1 checked for smoothness
    std::vector<double> angles;        // size N+1, angles[N] = pi
    std::vector<std::uint8_t> smooth;  // size N+1

    double theta(std::int64_t a) const { return angles[static_cast<std::size_t>(a)]; }
    bool is_smooth_at(std::int64_t a) const { return smooth[static_cast<std::size_t>(a)] != 0; }
    double half_width() const;   // pi / (2N)

    // Index of the interval I_a containing t under the partition convention:
    // I_a = [theta_a - pi/2N, theta_a + pi/2N) for a < N, I_N closed at pi.
    // Returns -1 when t lies left of I_0, N+1 when right of I_N.
    std::int64_t interval_index(double t) const;
};

// N = floor(n^2 / log^K0 n) unless N_override is given (used verbatim).
// Throws std::invalid_argument when n < 16 or the resulting N < 4n (the
// linearization regime needs N >> n^{3/2}).
SampleGrid build_grid(int n, double K0, double kappa, int P_max,
                      std::optional<std::int64_t> N_override = std::nullopt);

// True iff dist(p0 t / pi, Z) > gamma / n for every integer p0 in [1, P_max+1].
bool is_smooth(double t, double gamma, int n, int P_max);

// True iff all pairwise distances among {t_1..t_k, 0, pi} that involve at
// least one t_i are >= gamma / n.
bool is_spread(std::span<const double> ts, double gamma, int n);

// Fraction of grid angles that are not n^kappa-smooth.
double bad_arc_fraction(const SampleGrid& grid);

} // namespace kacpp
