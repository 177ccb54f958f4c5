#pragma once

#include <cmath>

namespace sbmocc {

// Dimension-dependent constants.  All core formulas are stated at the internal
// branching rate gamma = 2; use rescale_gamma to map results to other rates.
struct DimensionParams {
    int d = 0;
    double c_d = 0.0;     // Green constant: G(x,y) = c_d |x-y|^{2-d}
    double omega_d = 0.0; // surface area of the unit (d-1)-sphere
    double gamma = 2.0;

    static DimensionParams make(int d); // throws std::domain_error unless 3 <= d <= 8
};

// Free-space Green function at the given separation, c_d * sep^{2-d}.
double green_value(const DimensionParams& params, double separation);

// Average of G(x, z) over z uniform on the sphere |z| = r, with |x| = s.
// Equals c_d * max(s, r)^{2-d}.
double sphere_avg_green(const DimensionParams& params, double s, double r);

// Reduction of a far-start problem to the canonical one: start on the unit
// sphere, target ball of radius epsilon = 1/|x|.  Occupation mass computed in
// the canonical frame must be multiplied by occupation_factor to recover the
// original.
struct CanonicalProblem {
    double start_distance = 1.0; // always the unit sphere
    double epsilon = 0.0;
    double occupation_factor = 0.0;
};
CanonicalProblem canonicalize(double start_distance);
double decanonicalize(const CanonicalProblem& canonical); // original |x|

// Occupation statistics computed at gamma = 2 map to branching rate
// gamma_target by mass scaling with lambda = gamma_target / 2: occupation
// multiplies by lambda while the excursion-measure weight multiplies by
// 1/lambda (so conditioned laws keep total mass one).
double rescale_gamma(double gamma_target, double occupation_value);
double excursion_weight(double gamma_target);

// Combined spatial/mass parameter transform.  lambda scales lengths; the
// occupation-mass multiplier is exactly lambda^4 (times the branching-rate
// mass factor when gamma_in != gamma_out).
struct ScalingMap {
    double lambda = 1.0;
    double gamma_in = 2.0;
    double gamma_out = 2.0;

    double mass_factor() const { return lambda * lambda * lambda * lambda; }
    double apply_length(double x) const { return lambda * x; }
    double apply_occupation(double m) const {
        return m * mass_factor() * (gamma_out / gamma_in);
    }
    double apply_weight(double w) const { return w * (gamma_in / gamma_out); }
    ScalingMap inverse() const { return {1.0 / lambda, gamma_out, gamma_in}; }
};

} // namespace sbmocc
