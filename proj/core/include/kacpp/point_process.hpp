#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace kacpp {

struct Interval {
    double lo = 0, hi = 0;

    double length() const { return hi - lo; }
    bool contains(double x) const { return x >= lo && x <= hi; }
};

// Finite union of closed intervals.
struct IntervalSet {
    std::vector<Interval> parts;

    double total_length() const {
        double s = 0;
        for (const auto& p : parts) s += p.length();
        return s;
    }
    bool contains(double x) const {
        for (const auto& p : parts)
            if (p.contains(x)) return true;
        return false;
    }
};

// Sign convention for radial marks.  AbsMinusOne is n^2(|z|-1) as in the
// process construction; OneMinusAbs flips the sign to n^2(1-|z|).
enum class SignConvention { AbsMinusOne, OneMinusAbs };

SignConvention parse_sign_convention(const std::string& s);
std::string to_string(SignConvention s);

// Extended mark (theta, x, y, x', y'): anchor angle, radial mark n^2 rho,
// scaled angular offset N(theta - tau), and normalized derivatives.  The y
// slot is NaN for root-process marks (no angular prediction there).
struct ExtendedMark {
    double theta = 0, x = 0, y = 0, xp = 0, yp = 0;

    double radius() const { return std::hypot(xp, yp); }
};

// Counting measure on R: process(S) = #{marks in S}.
struct PointProcess {
    std::vector<double> marks;
    std::vector<ExtendedMark> extended;  // parallel to marks when collected

    std::size_t size() const { return marks.size(); }

    std::int64_t count(const Interval& iv) const {
        std::int64_t c = 0;
        for (double m : marks)
            if (iv.contains(m)) ++c;
        return c;
    }
    std::int64_t count(const IntervalSet& set) const {
        std::int64_t c = 0;
        for (double m : marks)
            if (set.contains(m)) ++c;
        return c;
    }
    std::int64_t total() const { return static_cast<std::int64_t>(marks.size()); }
};

} // namespace kacpp
