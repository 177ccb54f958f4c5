#pragma once

#include <vector>

#include "sbmocc/kernel.hpp"

namespace sbmocc {

// Radial solution u of  u'' + ((d-1)/r) u' = 2 u^2  on (epsilon, r_max) with
// u -> infinity at the inner boundary and u -> 0 at infinity.
//
// Internally the solver works with the scaled profile W(sigma) = r^2 u(r) at
// sigma = ln(r/epsilon), which turns the equation into an autonomous one:
//     W'' + (d-6) W' + (8-2d) W = 2 W^2.
// The connecting orbit is computed once by integrating inward from the
// far-field invariant manifold (the outward direction is dynamically unstable:
// boundary-layer perturbation modes grow like sigma^6 relative to the
// solution, so forward shooting loses all accuracy before leaving the layer).
// The blow-up location is recovered by matching the boundary-layer series
//     W = 3 s^-2 + c1 s^-1 + c0 + cm1 s + c2 s^2 + c3 s^3 + ...
// whose coefficients follow from order-by-order substitution.
struct SemilinearSolution {
    DimensionParams params;
    double epsilon = 0.0;
    double r_max = 0.0;

    // Sampled profile (dense near the inner boundary, log-spaced far field).
    std::vector<double> radii;
    std::vector<double> u_values;

    // Fitted coefficient of the linear decay mode over the last two decades:
    // u ~ amplitude * r^{2-d} for d >= 5, u ~ amplitude * r^{-2} for d <= 4.
    double farfield_amplitude = 0.0;
    double farfield_fit_residual = 0.0;

    // Maximum scaled step defect of the integrator (step-doubling estimate).
    double residual_norm = 0.0;

    double evaluate(double r) const;        // u(r), epsilon < r <= r_max
    double scaled_profile(double sigma) const; // W(sigma), sigma = ln(r/epsilon) > 0

    // Orbit data (exposed for diagnostics/tests).
    std::vector<double> orbit_sigma, orbit_w, orbit_dw;
    double series_c[5] = {0, 0, 0, 0, 0}; // c1, c0, cm1, c2, c3
    double sigma_join = 1e-4;              // series used below, orbit above
};

// accuracy_scale < 1 refines the integrator steps (used by convergence checks).
SemilinearSolution solve_radial(const DimensionParams& params, double epsilon,
                                double r_max, double accuracy_scale = 1.0);

// Exact point-hitting value (8-2d)/gamma * distance^{-2}, d <= 3 only.
double exact_point_hitting(const DimensionParams& params, double distance);

// u(distance) * distance^2 * log(1/epsilon); tends to 1 as epsilon -> 0 (d = 4).
double iscoe_ratio(const SemilinearSolution& solution, double distance);

struct KappaEstimate {
    double kappa = 0.0;
    double fit_residual = 0.0;
};
// Far-field hitting amplitude for d >= 5 from a solution with epsilon = 1:
// kappa = gamma * lim u(r) r^{d-2}, power-law fit over the last two decades.
KappaEstimate estimate_kappa(const SemilinearSolution& solution);

} // namespace sbmocc
