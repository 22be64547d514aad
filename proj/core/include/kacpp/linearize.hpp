#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "kacpp/field.hpp"
#include "kacpp/grid.hpp"
#include "kacpp/point_process.hpp"

namespace kacpp {

// Affine local model F(dt, rho) = (X, Y) + [[dX, dY], [dY, -dX]] (dt, rho)^T
// anchored at angle theta.  The matrix is a scaled orthogonal-conjugate form:
// det = -(dX^2 + dY^2) and the operator norm of its inverse is
// 1/sqrt(dX^2 + dY^2).
struct LinearModel {
    double theta = 0;
    double X = 0, Y = 0;
    double dX = 0, dY = 0;

    std::pair<double, double> apply(double dt, double rho) const {
        return {X + dX * dt + dY * rho, Y + dY * dt - dX * rho};
    }
    double det() const { return -(dX * dX + dY * dY); }
    double inverse_norm() const;
    static LinearModel from_sample(const FieldSample& s) {
        return LinearModel{s.t, s.X, s.Y, s.dX, s.dY};
    }
};

// Zero of the affine model: predicted radial offset and angle of the root
// candidate nearest to e^{i theta}.  Degenerate when dX = dY = 0.
struct PredictedRoot {
    std::int64_t alpha = 0;
    double rho = 0;
    double tau = 0;
    bool degenerate = false;

    double mark(int n, SignConvention sign = SignConvention::AbsMinusOne) const {
        const double z = static_cast<double>(n) * static_cast<double>(n) * rho;
        return sign == SignConvention::AbsMinusOne ? z : -z;
    }
};

struct EventFlags {
    bool a_prime = false;
    bool a_doubleprime = false;

    bool a() const { return a_prime && a_doubleprime; }
};

PredictedRoot predict(const FieldSample& sample, double theta);

// Field-size bound used in the typicality event: pi n log^2 n / (2N), the
// sup of |(X,Y)| projections over predictions that stay inside their arc
// with the derivative band enforced.
double xy_event_bound(int n, std::int64_t N);

EventFlags evaluate_events(const PredictedRoot& pred, const FieldSample& sample,
                           const SampleGrid& grid);

// One grid angle whose good event fired.
struct AlphaEvent {
    std::int64_t alpha = 0;
    double theta = 0;
    double rho = 0, tau = 0;
    double xp = 0, yp = 0;   // normalized derivatives dX/n, dY/n
    bool smooth = false;
};

struct MuProcesses {
    PointProcess mu_sharp;
    PointProcess mu_flat;
    std::vector<AlphaEvent> events;  // all alpha with the event true, in index order
};

MuProcesses build_mu(const std::vector<FieldSample>& samples, const SampleGrid& grid,
                     SignConvention sign = SignConvention::AbsMinusOne);
MuProcesses build_mu(const KacPolynomial& poly, const SampleGrid& grid,
                     SignConvention sign = SignConvention::AbsMinusOne);

// Lemma-style separation audit over the passing events of one trial:
// clause 1: adjacent passing smooth pairs must have |tau - theta| in
//           [pi/2N (1 - log^{-K0} n), pi/2N];
// clause 2: no two passing smooth events at angle distance in
//           (pi/N, 1/(n log^{4 K0} n)].
struct SeparationAudit {
    std::int64_t adjacent_pairs = 0;
    std::int64_t clause1_violations = 0;
    std::int64_t clause2_violations = 0;
};

SeparationAudit audit_separation(const std::vector<AlphaEvent>& events, const SampleGrid& grid);

} // namespace kacpp
