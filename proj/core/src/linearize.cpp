#include "kacpp/linearize.hpp"

#include <cmath>

namespace kacpp {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

double LinearModel::inverse_norm() const {
    return 1.0 / std::sqrt(dX * dX + dY * dY);
}

PredictedRoot predict(const FieldSample& sample, double theta) {
    PredictedRoot p;
    const double d = sample.dX * sample.dX + sample.dY * sample.dY;
    if (d <= 0) {
        p.degenerate = true;
        return p;
    }
    p.rho = (sample.dX * sample.Y - sample.X * sample.dY) / d;
    p.tau = theta - (sample.X * sample.dX + sample.Y * sample.dY) / d;
    return p;
}

double xy_event_bound(int n, std::int64_t N) {
    const double ln = std::log(static_cast<double>(n));
    return kPi * static_cast<double>(n) * ln * ln / (2.0 * static_cast<double>(N));
}

EventFlags evaluate_events(const PredictedRoot& pred, const FieldSample& sample,
                           const SampleGrid& grid) {
    EventFlags flags;
    if (pred.degenerate) return flags;
    const int n = grid.n;
    const double ln = std::log(static_cast<double>(n));
    const double n2 = static_cast<double>(n) * static_cast<double>(n);

    flags.a_prime = grid.interval_index(pred.tau) == pred.alpha && n2 * std::abs(pred.rho) <= ln;

    const double xy_bound = xy_event_bound(n, grid.N);
    const double d_lo = static_cast<double>(n) * std::pow(ln, -2.0 * grid.K0);
    const double d_hi = static_cast<double>(n) * ln * ln;
    const double adx = std::abs(sample.dX);
    const double ady = std::abs(sample.dY);
    flags.a_doubleprime = std::abs(sample.X) <= xy_bound && std::abs(sample.Y) <= xy_bound &&
                          adx >= d_lo && adx <= d_hi && ady >= d_lo && ady <= d_hi;
    return flags;
}

MuProcesses build_mu(const std::vector<FieldSample>& samples, const SampleGrid& grid,
                     SignConvention sign) {
    MuProcesses out;
    const int n = grid.n;
    for (std::int64_t a = 0; a <= grid.N; ++a) {
        const FieldSample& s = samples[static_cast<std::size_t>(a)];
        PredictedRoot pred = predict(s, grid.theta(a));
        pred.alpha = a;
        const EventFlags flags = evaluate_events(pred, s, grid);
        if (!flags.a()) continue;

        const bool smooth = grid.is_smooth_at(a);
        const auto [xp, yp] = s.normalized_derivative();
        const double mark = pred.mark(n, sign);
        ExtendedMark em;
        em.theta = grid.theta(a);
        em.x = mark;
        em.y = static_cast<double>(grid.N) * (grid.theta(a) - pred.tau);
        em.xp = xp;
        em.yp = yp;

        PointProcess& dst = smooth ? out.mu_sharp : out.mu_flat;
        dst.marks.push_back(mark);
        dst.extended.push_back(em);
        out.events.push_back(AlphaEvent{a, grid.theta(a), pred.rho, pred.tau, xp, yp, smooth});
    }
    return out;
}

MuProcesses build_mu(const KacPolynomial& poly, const SampleGrid& grid, SignConvention sign) {
    return build_mu(batch_eval_grid(poly, grid), grid, sign);
}

SeparationAudit audit_separation(const std::vector<AlphaEvent>& events, const SampleGrid& grid) {
    SeparationAudit audit;
    const double ln = std::log(static_cast<double>(grid.n));
    const double half = grid.half_width();
    const double lo = half * (1.0 - std::pow(ln, -grid.K0));
    const double clause2_hi = 1.0 / (static_cast<double>(grid.n) * std::pow(ln, 4.0 * grid.K0));
    const double pi_over_N = 2.0 * half;

    for (std::size_t i = 0; i < events.size(); ++i) {
        if (!events[i].smooth) continue;
        for (std::size_t j = i + 1; j < events.size(); ++j) {
            if (!events[j].smooth) continue;
            if (events[j].alpha == events[i].alpha + 1) {
                ++audit.adjacent_pairs;
                const double off = std::abs(events[i].tau - events[i].theta);
                if (off < lo || off > half) ++audit.clause1_violations;
            }
            const double dist = std::abs(events[j].theta - events[i].theta);
            if (dist > pi_over_N && dist <= clause2_hi) ++audit.clause2_violations;
        }
    }
    return audit;
}

} // namespace kacpp
