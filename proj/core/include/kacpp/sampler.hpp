#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kacpp/prng.hpp"

namespace kacpp {

enum class LawKind { Gaussian, Rademacher, UniformSymmetric, DiscreteSymmetric };

// A mean-zero, unit-variance coefficient law.  Built-in laws are exactly
// normalized; discrete laws are validated at construction.
class CoefficientLaw {
public:
    static CoefficientLaw gaussian();
    static CoefficientLaw rademacher();
    static CoefficientLaw uniform_symmetric();   // uniform on [-sqrt(3), sqrt(3)]
    // values/probs define a discrete law; must satisfy sum p = 1, sum p v = 0,
    // sum p v^2 = 1, support size >= 2.  Throws std::invalid_argument otherwise.
    static CoefficientLaw discrete(std::vector<double> values, std::vector<double> probs);

    // Parse "gaussian", "rademacher", "uniform", or "discrete:v1,p1,v2,p2,...".
    static CoefficientLaw parse(const std::string& spec);

    LawKind kind() const noexcept { return kind_; }
    const std::string& name() const noexcept { return name_; }
    double fourth_moment() const noexcept { return fourth_moment_; }

    double sample(Philox& g) const;

private:
    CoefficientLaw(LawKind k, std::string name, double mu4)
        : kind_(k), name_(std::move(name)), fourth_moment_(mu4) {}

    LawKind kind_;
    std::string name_;
    double fourth_moment_;
    std::vector<double> values_;
    std::vector<double> cum_probs_;
};

struct SeedSpec {
    std::uint64_t master_seed = 0;
    std::uint64_t trial_index = 0;
};

// i.i.d. coefficients xi_0..xi_n; a pure function of (law, n, seed).
std::vector<double> draw_coefficients(const CoefficientLaw& law, int n, SeedSpec seed);

} // namespace kacpp
