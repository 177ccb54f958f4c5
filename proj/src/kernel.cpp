#include "sbmocc/kernel.hpp"

#include <numbers>
#include <stdexcept>

namespace sbmocc {

DimensionParams DimensionParams::make(int d) {
    if (d < 3 || d > 8)
        throw std::domain_error("DimensionParams: supported dimensions are 3..8");
    DimensionParams p;
    p.d = d;
    const double half_d = 0.5 * d;
    const double pi_pow = std::pow(std::numbers::pi, half_d);
    p.c_d = std::tgamma(half_d - 1.0) / (2.0 * pi_pow);
    p.omega_d = 2.0 * pi_pow / std::tgamma(half_d);
    p.gamma = 2.0;
    return p;
}

double green_value(const DimensionParams& params, double separation) {
    if (!(separation > 0.0))
        throw std::domain_error("green_value: separation must be positive");
    return params.c_d * std::pow(separation, 2.0 - params.d);
}

double sphere_avg_green(const DimensionParams& params, double s, double r) {
    if (!(s >= 0.0) || !(r >= 0.0) || (s == 0.0 && r == 0.0))
        throw std::domain_error("sphere_avg_green: radii must be nonnegative, not both zero");
    return params.c_d * std::pow(std::max(s, r), 2.0 - params.d);
}

CanonicalProblem canonicalize(double start_distance) {
    if (!(start_distance > 1.0))
        throw std::domain_error("canonicalize: start must lie outside the unit sphere");
    CanonicalProblem c;
    c.start_distance = 1.0;
    c.epsilon = 1.0 / start_distance;
    const double x2 = start_distance * start_distance;
    c.occupation_factor = x2 * x2;
    return c;
}

double decanonicalize(const CanonicalProblem& canonical) {
    if (!(canonical.epsilon > 0.0) || !(canonical.epsilon < 1.0))
        throw std::domain_error("decanonicalize: epsilon must lie in (0,1)");
    return 1.0 / canonical.epsilon;
}

double rescale_gamma(double gamma_target, double occupation_value) {
    if (!(gamma_target > 0.0))
        throw std::domain_error("rescale_gamma: branching rate must be positive");
    return occupation_value * (gamma_target / 2.0);
}

double excursion_weight(double gamma_target) {
    if (!(gamma_target > 0.0))
        throw std::domain_error("excursion_weight: branching rate must be positive");
    return 2.0 / gamma_target;
}

} // namespace sbmocc
