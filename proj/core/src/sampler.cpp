#include "kacpp/sampler.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace kacpp {

namespace {
constexpr double kSqrt3 = 1.7320508075688772935;
}

CoefficientLaw CoefficientLaw::gaussian() {
    return CoefficientLaw(LawKind::Gaussian, "gaussian", 3.0);
}

CoefficientLaw CoefficientLaw::rademacher() {
    return CoefficientLaw(LawKind::Rademacher, "rademacher", 1.0);
}

CoefficientLaw CoefficientLaw::uniform_symmetric() {
    // E x^4 = (sqrt3)^4 / 5 = 9/5 for uniform on [-sqrt3, sqrt3].
    return CoefficientLaw(LawKind::UniformSymmetric, "uniform", 1.8);
}

CoefficientLaw CoefficientLaw::discrete(std::vector<double> values, std::vector<double> probs) {
    if (values.size() != probs.size())
        throw std::invalid_argument("discrete law: values/probs size mismatch");
    if (values.size() < 2)
        throw std::invalid_argument("discrete law: support size must be >= 2");
    double psum = 0, mean = 0, var = 0, mu4 = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (probs[i] <= 0)
            throw std::invalid_argument("discrete law: probabilities must be positive");
        psum += probs[i];
        mean += probs[i] * values[i];
        var += probs[i] * values[i] * values[i];
        mu4 += probs[i] * std::pow(values[i], 4);
    }
    const double tol = 1e-12;
    if (std::abs(psum - 1.0) > tol)
        throw std::invalid_argument("discrete law: probabilities must sum to 1");
    if (std::abs(mean) > tol)
        throw std::invalid_argument("discrete law: mean must be 0");
    if (std::abs(var - 1.0) > tol)
        throw std::invalid_argument("discrete law: variance must be 1");

    std::ostringstream name;
    name << "discrete:";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) name << ",";
        name << values[i] << "," << probs[i];
    }
    CoefficientLaw law(LawKind::DiscreteSymmetric, name.str(), mu4);
    law.values_ = std::move(values);
    law.cum_probs_.resize(probs.size());
    double c = 0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        c += probs[i];
        law.cum_probs_[i] = c;
    }
    law.cum_probs_.back() = 1.0;
    return law;
}

CoefficientLaw CoefficientLaw::parse(const std::string& spec) {
    if (spec == "gaussian") return gaussian();
    if (spec == "rademacher") return rademacher();
    if (spec == "uniform") return uniform_symmetric();
    if (spec.rfind("discrete:", 0) == 0) {
        std::vector<double> nums;
        std::stringstream ss(spec.substr(9));
        std::string tok;
        while (std::getline(ss, tok, ','))
            nums.push_back(std::stod(tok));
        if (nums.size() % 2 != 0)
            throw std::invalid_argument("discrete law spec: expected v1,p1,v2,p2,...");
        std::vector<double> v, p;
        for (std::size_t i = 0; i < nums.size(); i += 2) {
            v.push_back(nums[i]);
            p.push_back(nums[i + 1]);
        }
        return discrete(std::move(v), std::move(p));
    }
    throw std::invalid_argument("unknown coefficient law: " + spec);
}

double CoefficientLaw::sample(Philox& g) const {
    switch (kind_) {
    case LawKind::Gaussian:
        return g.next_gaussian();
    case LawKind::Rademacher:
        return (g.next_u64() & 1u) ? 1.0 : -1.0;
    case LawKind::UniformSymmetric:
        return (2.0 * g.next_unit() - 1.0) * kSqrt3;
    case LawKind::DiscreteSymmetric: {
        const double u = g.next_unit();
        for (std::size_t i = 0; i + 1 < cum_probs_.size(); ++i)
            if (u < cum_probs_[i]) return values_[i];
        return values_.back();
    }
    }
    return 0.0;  // unreachable
}

std::vector<double> draw_coefficients(const CoefficientLaw& law, int n, SeedSpec seed) {
    if (n < 1) throw std::invalid_argument("draw_coefficients: degree must be >= 1");
    Philox g(seed.master_seed, seed.trial_index);
    std::vector<double> xi(static_cast<std::size_t>(n) + 1);
    for (auto& x : xi) x = law.sample(g);
    return xi;
}

} // namespace kacpp
