#pragma once

#include "sbmocc/kernel.hpp"

namespace sbmocc {

// Radially symmetric test function supported on the ball of radius epsilon,
// given as a profile on the unit ball: phi_eps(y) = profile(|y|/epsilon).
// phi_bar is the integral of the unscaled profile over R^d (so the integral
// of phi_eps is epsilon^d * phi_bar).
struct TestFunctionSpec {
    enum class Shape { ball_indicator, smooth_bump };

    Shape shape = Shape::ball_indicator;
    double epsilon = 1.0;
    double phi_bar = 0.0;
    int dimension = 0;

    static TestFunctionSpec make(Shape shape, double epsilon, const DimensionParams& params);

    // Profile value at u = |y| / epsilon; 0 <= profile <= 1, zero for u > 1.
    double profile(double u) const;
};

} // namespace sbmocc
