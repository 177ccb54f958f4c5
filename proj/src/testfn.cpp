#include "sbmocc/testfn.hpp"

#include <cmath>
#include <stdexcept>

#include "sbmocc/mathutil.hpp"

namespace sbmocc {

namespace {

double bump_profile(double u) {
    if (u >= 1.0) return 0.0;
    const double t = 1.0 - u * u;
    return std::exp(1.0 - 1.0 / t);
}

} // namespace

TestFunctionSpec TestFunctionSpec::make(Shape shape, double epsilon,
                                        const DimensionParams& params) {
    if (!(epsilon > 0.0))
        throw std::domain_error("TestFunctionSpec: epsilon must be positive");
    TestFunctionSpec spec;
    spec.shape = shape;
    spec.epsilon = epsilon;
    spec.dimension = params.d;
    if (shape == Shape::ball_indicator) {
        spec.phi_bar = params.omega_d / params.d; // volume of the unit ball
    } else {
        const int d = params.d;
        const double radial = adaptive_simpson(
            [d](double u) { return bump_profile(u) * std::pow(u, d - 1); }, 0.0, 1.0, 1e-13);
        spec.phi_bar = params.omega_d * radial;
    }
    return spec;
}

double TestFunctionSpec::profile(double u) const {
    if (u < 0.0) throw std::domain_error("TestFunctionSpec: radius ratio must be >= 0");
    if (shape == Shape::ball_indicator) return u <= 1.0 ? 1.0 : 0.0;
    return bump_profile(u);
}

} // namespace sbmocc
