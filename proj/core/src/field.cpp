#include "kacpp/field.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace kacpp {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
using cd = std::complex<double>;

// f(z) and f'(z) by Horner.
void horner2(const std::vector<double>& c, cd z, cd& f, cd& fp) {
    const int n = static_cast<int>(c.size()) - 1;
    f = cd(c[static_cast<std::size_t>(n)], 0);
    fp = cd(0, 0);
    for (int k = n - 1; k >= 0; --k) {
        fp = fp * z + f;
        f = f * z + c[static_cast<std::size_t>(k)];
    }
}
} // namespace

std::pair<double, double> eval_field(const KacPolynomial& poly, double rho, double t) {
    if (std::abs(rho) > 0.5) throw std::invalid_argument("eval_field: |rho| must be <= 1/2");
    const int n = poly.degree();
    const cd z = std::polar(1.0 + rho, t);
    cd f(poly.coeffs.back(), 0);
    for (int k = n - 1; k >= 0; --k) f = f * z + poly.coeffs[static_cast<std::size_t>(k)];
    const double s = 1.0 / std::sqrt(static_cast<double>(n));
    return {f.real() * s, f.imag() * s};
}

FieldSample eval_sample(const KacPolynomial& poly, double t) {
    const int n = poly.degree();
    const cd z = std::polar(1.0, t);
    cd f, fp;
    horner2(poly.coeffs, z, f, fp);
    const cd s2 = z * fp;  // sum k xi_k e^{ikt}
    const double s = 1.0 / std::sqrt(static_cast<double>(n));
    FieldSample out;
    out.t = t;
    out.n = n;
    out.X = f.real() * s;
    out.Y = f.imag() * s;
    out.dX = -s2.imag() * s;
    out.dY = s2.real() * s;
    return out;
}

std::pair<double, double> eval_radial_partials(const KacPolynomial& poly, double t) {
    const int n = poly.degree();
    // Horner on the coefficient sequence k*xi_k (degree n, constant term 0).
    const cd z = std::polar(1.0, t);
    cd acc(static_cast<double>(n) * poly.coeffs.back(), 0);
    for (int k = n - 1; k >= 0; --k)
        acc = acc * z + cd(static_cast<double>(k) * poly.coeffs[static_cast<std::size_t>(k)], 0);
    const double s = 1.0 / std::sqrt(static_cast<double>(n));
    return {acc.real() * s, acc.imag() * s};
}

GridEvaluator::GridEvaluator(int n, const SampleGrid& grid)
    : n_(n), N_(grid.N), L_(2 * static_cast<std::size_t>(grid.N)), plan_(L_), buf_(L_) {}

void GridEvaluator::eval_into(const KacPolynomial& poly, std::vector<FieldSample>& out) {
    if (poly.degree() != n_) throw std::invalid_argument("GridEvaluator: degree mismatch");
    std::fill(buf_.begin(), buf_.end(), cd(0, 0));
    // pack a_j + i b_j with a = xi (folded mod 2N) and b = k*xi
    for (int k = 0; k <= n_; ++k) {
        const std::size_t j = static_cast<std::size_t>(k) % L_;
        const double xi = poly.coeffs[static_cast<std::size_t>(k)];
        buf_[j] += cd(xi, static_cast<double>(k) * xi);
    }
    plan_.execute(buf_, +1);

    out.resize(static_cast<std::size_t>(N_) + 1);
    const double s = 1.0 / std::sqrt(static_cast<double>(n_));
    for (std::int64_t a = 0; a <= N_; ++a) {
        const std::size_t ia = static_cast<std::size_t>(a);
        const std::size_t im = (L_ - ia) % L_;
        const cd ca = buf_[ia];
        const cd cm = std::conj(buf_[im]);
        const cd s1 = 0.5 * (ca + cm);               // sum xi e^{ikt}
        const cd s2 = cd(0, -0.5) * (ca - cm);        // sum k xi e^{ikt}
        FieldSample& fs = out[ia];
        fs.t = kPi * static_cast<double>(a) / static_cast<double>(N_);
        fs.n = n_;
        fs.X = s1.real() * s;
        fs.Y = s1.imag() * s;
        fs.dX = -s2.imag() * s;
        fs.dY = s2.real() * s;
    }
    out.back().t = kPi;
}

std::vector<FieldSample> GridEvaluator::eval(const KacPolynomial& poly) {
    std::vector<FieldSample> out;
    eval_into(poly, out);
    return out;
}

std::vector<FieldSample> batch_eval_grid(const KacPolynomial& poly, const SampleGrid& grid) {
    GridEvaluator ev(poly.degree(), grid);
    return ev.eval(poly);
}

GEventReport check_event_G(const KacPolynomial& poly) {
    const int n = poly.degree();
    const double ln = std::log(static_cast<double>(n));
    const double ln2 = ln * ln;
    const double rho0 = ln / (static_cast<double>(n) * static_cast<double>(n));
    const std::size_t L = 8 * static_cast<std::size_t>(n);
    fft::Plan plan(L);

    // thresholds n^{k+1/2} log^2 n with factor-2 headroom
    const double sqn = std::sqrt(static_cast<double>(n));
    const double thr0 = 0.5 * sqn * ln2;
    const double thr1 = 0.5 * sqn * static_cast<double>(n) * ln2;
    const double thr2 = 0.5 * sqn * static_cast<double>(n) * static_cast<double>(n) * ln2;

    double worst = 0;
    std::vector<cd> c0(L), c1(L), c2(L);
    for (double sgn : {+1.0, -1.0}) {
        const double r = 1.0 + sgn * rho0;
        std::fill(c0.begin(), c0.end(), cd(0, 0));
        std::fill(c1.begin(), c1.end(), cd(0, 0));
        std::fill(c2.begin(), c2.end(), cd(0, 0));
        double rk = 1.0;  // r^k
        for (int k = 0; k <= n; ++k) {
            const double xi = poly.coeffs[static_cast<std::size_t>(k)];
            c0[static_cast<std::size_t>(k) % L] += cd(xi * rk, 0);
            if (k >= 1)
                c1[static_cast<std::size_t>(k - 1) % L] += cd(static_cast<double>(k) * xi * rk / r, 0);
            if (k >= 2)
                c2[static_cast<std::size_t>(k - 2) % L] +=
                    cd(static_cast<double>(k) * static_cast<double>(k - 1) * xi * rk / (r * r), 0);
            rk *= r;
        }
        plan.execute(c0, +1);
        plan.execute(c1, +1);
        plan.execute(c2, +1);
        for (std::size_t j = 0; j < L; ++j) {
            const double t = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(L);
            const cd z = std::polar(r, t);
            const cd f = c0[j];
            const cd fp = c1[j];
            const cd fpp = c2[j];
            // polar partials: d/drho = e^{it} f', d/dtheta = i z f',
            // d2/drho2 = e^{2it} f'', d2/dtheta2 = -(z f' + z^2 f''),
            // d2/drho dtheta = i e^{it} (f' + z f'')
            const double v0 = std::abs(f);
            const double v1 = std::abs(fp) * std::max(1.0, r);
            const double v2a = std::abs(fpp);
            const double v2b = std::abs(z * fp + z * z * fpp);
            const double v2c = std::abs(fp + z * fpp);
            worst = std::max(worst, v0 / thr0);
            worst = std::max(worst, v1 / thr1);
            worst = std::max(worst, std::max({v2a, v2b, v2c}) / thr2);
        }
    }
    GEventReport rep;
    rep.worst_ratio = worst;
    rep.passed = worst <= 1.0;
    return rep;
}

} // namespace kacpp
