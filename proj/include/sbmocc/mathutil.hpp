#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "sbmocc/errors.hpp"

namespace sbmocc {

inline double rel_diff(double a, double b) {
    double scale = std::max(std::abs(a), std::abs(b));
    if (scale == 0.0) return 0.0;
    return std::abs(a - b) / scale;
}

// Symmetric relative difference against the midpoint; used for "agree within x%" checks.
inline double sym_rel_diff(double a, double b) {
    double mid = 0.5 * (std::abs(a) + std::abs(b));
    if (mid == 0.0) return 0.0;
    return std::abs(a - b) / mid;
}

// Adaptive Simpson quadrature for smooth 1-d integrands (test oracles, tail bounds).
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-11, int max_depth = 40);

// Cumulative integrals on a uniformly spaced abscissa (spacing h) using
// 4th-order panel rules (cubic through 4 neighbouring nodes).  `breaks` lists
// node indices where the integrand has reduced smoothness; interpolation
// stencils never straddle a break.  Returns P with P[0]=0 and
// P[i] = integral from x_0 to x_i.
std::vector<double> cumulative_integral4(std::span<const double> g, double h,
                                         std::span<const std::size_t> breaks = {});

// Monotone cubic (Fritsch-Carlson) interpolation through (x_i, y_i), x strictly increasing.
class MonotoneCubic {
public:
    MonotoneCubic() = default;
    MonotoneCubic(std::vector<double> x, std::vector<double> y);
    double operator()(double x) const;
    bool empty() const { return x_.empty(); }

private:
    std::vector<double> x_, y_, m_;
};

// Least-squares line fit of y against x.  If slope_fixed is finite the slope is
// pinned and only the intercept is fitted.  Returns {slope, intercept, max_abs_residual}.
struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double max_residual = 0.0;
};
LineFit fit_line(std::span<const double> x, std::span<const double> y,
                 double slope_fixed = std::numeric_limits<double>::quiet_NaN());

} // namespace sbmocc
