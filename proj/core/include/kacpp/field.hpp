#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "kacpp/fft.hpp"
#include "kacpp/grid.hpp"

namespace kacpp {

// f(z) = sum_{k=0}^{n} coeffs[k] z^k.
struct KacPolynomial {
    std::vector<double> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

// One sample of the normalized field at angle t on the unit circle:
//   X + iY = f(e^{it}) / sqrt(n),   dX + i dY = d/dt (X + iY).
// The normalized derivative pair (dX/n, dY/n) completes the 4-vector
// W(t) = (X, Y, X'/n, Y'/n) that drives the linear model.
struct FieldSample {
    double t = 0;
    double X = 0, Y = 0;
    double dX = 0, dY = 0;
    int n = 0;

    std::pair<double, double> normalized_derivative() const {
        return {dX / static_cast<double>(n), dY / static_cast<double>(n)};
    }
};

// X,Y at z = (1+rho) e^{it} via complex Horner.  Requires |rho| <= 1/2.
std::pair<double, double> eval_field(const KacPolynomial& poly, double rho, double t);

FieldSample eval_sample(const KacPolynomial& poly, double t);

// (dX/drho, dY/drho) at rho = 0, computed from the coefficient sums
// sum k xi_k cos(kt) / sqrt(n) and sum k xi_k sin(kt) / sqrt(n).  By the
// polar Cauchy-Riemann identities these equal (dY, -dX) of eval_sample.
std::pair<double, double> eval_radial_partials(const KacPolynomial& poly, double t);

// Batch evaluation on all grid angles via one length-2N DFT (coefficients
// folded mod 2N; Bluestein when 2N is not a power of two).  Holds the plan
// and scratch, so reuse one instance per worker across trials.
class GridEvaluator {
public:
    GridEvaluator(int n, const SampleGrid& grid);

    std::vector<FieldSample> eval(const KacPolynomial& poly);
    void eval_into(const KacPolynomial& poly, std::vector<FieldSample>& out);

private:
    int n_;
    std::int64_t N_;
    std::size_t L_;
    fft::Plan plan_;
    std::vector<fft::cd> buf_;
};

std::vector<FieldSample> batch_eval_grid(const KacPolynomial& poly, const SampleGrid& grid);

// Empirical check of the derivative-bound event: |f|, |f'|, |f''| and the
// polar partials, sampled on 8n angles on the two circles 1 +- log n / n^2,
// against thresholds n^{k+1/2} log^2 n halved for Bernstein factor-2 headroom
// (the grid max can undershoot the circle sup by at most 2x).
struct GEventReport {
    bool passed = false;
    double worst_ratio = 0;   // max |value| / (threshold/2); passed iff <= 1
};

GEventReport check_event_G(const KacPolynomial& poly);

} // namespace kacpp
