#include "sbmocc/hitting.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "sbmocc/errors.hpp"
#include "sbmocc/mathutil.hpp"

namespace sbmocc {

namespace {

struct SeriesCoeffs {
    double c1, c0, cm1, c2, c3;
};

SeriesCoeffs series_coeffs(int d) {
    SeriesCoeffs c{};
    const double k = 8.0 - 2.0 * d;
    c.c1 = 0.6 * (6.0 - d);
    c.c0 = -(d - 6.0) * (d - 6.0) / 100.0 + 0.5 * (4.0 - d);
    c.cm1 = c.c1 * (k - 4.0 * c.c0) / 12.0;
    c.c2 = ((d - 6.0) * c.cm1 + k * c.c0 - 4.0 * c.c1 * c.cm1 - 2.0 * c.c0 * c.c0) / 10.0;
    c.c3 = (2.0 * (d - 6.0) * c.c2 + k * c.cm1 - 4.0 * c.c1 * c.c2 - 4.0 * c.c0 * c.cm1) / 6.0;
    return c;
}

double series_w(const SeriesCoeffs& c, double s) {
    return 3.0 / (s * s) + c.c1 / s + c.c0 + s * (c.cm1 + s * (c.c2 + s * c.c3));
}

double series_dw(const SeriesCoeffs& c, double s) {
    return -6.0 / (s * s * s) - c.c1 / (s * s) + c.cm1 + s * (2.0 * c.c2 + 3.0 * s * c.c3);
}

// Inward-time system: v(s) = W(x0 - s), so v'' = (d-6) v' - (8-2d) v + 2 v^2
// with v' = -W'.
struct InwardOde {
    double a; // d - 6
    double b; // 8 - 2d
    void rhs(double v, double vp, double& dv, double& dvp) const {
        dv = vp;
        dvp = a * vp - b * v + 2.0 * v * v;
    }
    void rk4(double& v, double& vp, double h) const {
        double k1v, k1p, k2v, k2p, k3v, k3p, k4v, k4p;
        rhs(v, vp, k1v, k1p);
        rhs(v + 0.5 * h * k1v, vp + 0.5 * h * k1p, k2v, k2p);
        rhs(v + 0.5 * h * k2v, vp + 0.5 * h * k2p, k3v, k3p);
        rhs(v + h * k3v, vp + h * k3p, k4v, k4p);
        v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        vp += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
    }
};

struct Orbit {
    std::vector<double> sigma, w, dw; // increasing sigma, re-anchored at the blow-up
    double s_star = 0.0;
    double defect = 0.0;
    SeriesCoeffs cs{};
};

constexpr double kBlowupCut = 1e10;
constexpr double kSeriesJoin = 1e-4;

Orbit integrate_orbit(int d, double sigma_need, double accuracy_scale) {
    const InwardOde ode{double(d) - 6.0, 8.0 - 2.0 * d};
    const SeriesCoeffs cs = series_coeffs(d);
    const double h0 = 0.004 * accuracy_scale;
    const double eta = 0.01 * accuracy_scale;

    double margin = 8.0;
    for (int attempt = 0; attempt < 4; ++attempt, margin += 10.0) {
        // Seed on the inward-unstable manifold of the far-field rest point.
        double v, vp;
        const double span = sigma_need + margin;
        if (d == 3) {
            const double mu = 0.5 * (3.0 - std::sqrt(17.0)); // approach rate to w* = 1
            const double dev = std::exp(mu * span);
            v = 1.0 + dev;
            vp = -mu * dev;
        } else if (d == 4) {
            const double x0 = span + 17.0;
            v = 1.0 / x0 + std::log(x0) / (x0 * x0);
            vp = 1.0 / (x0 * x0) - (1.0 - 2.0 * std::log(x0)) / (x0 * x0 * x0);
        } else {
            const double dev = std::exp(-(double(d) - 4.0) * span);
            v = dev;
            vp = (double(d) - 4.0) * dev;
        }

        std::vector<double> ss, vs, vps;
        ss.reserve(1 << 14);
        double s = 0.0, defect = 0.0;
        ss.push_back(s), vs.push_back(v), vps.push_back(vp);
        const long max_steps = 4'000'000;
        bool blew_up = false;
        for (long step = 0; step < max_steps; ++step) {
            double h = h0;
            if (v > 100.0) h = std::min(h, eta * std::sqrt(3.0 / v));
            double v1 = v, p1 = vp;
            ode.rk4(v1, p1, h);
            // step-doubling defect
            double v2 = v, p2 = vp;
            ode.rk4(v2, p2, 0.5 * h);
            ode.rk4(v2, p2, 0.5 * h);
            defect = std::max(defect, std::abs(v1 - v2) / std::max(std::abs(v2), 1.0));
            v = v2, vp = p2; // keep the finer result
            s += h;
            ss.push_back(s), vs.push_back(v), vps.push_back(vp);
            if (v >= kBlowupCut) {
                blew_up = true;
                break;
            }
            if (!std::isfinite(v) || v < -1.0)
                throw numeric_error("solve_radial: orbit left the admissible region");
        }
        if (!blew_up)
            throw numeric_error("solve_radial: no blow-up detected within step budget");

        // Anchor the singular point with the boundary-layer series.
        const double vk = vs.back(), vpk = vps.back();
        double sig = std::sqrt(3.0 / vk);
        for (int it = 0; it < 6; ++it) {
            const double f = series_w(cs, sig) - vk;
            const double df = series_dw(cs, sig);
            sig -= f / df;
        }
        const double deriv_mismatch = std::abs(-series_dw(cs, sig) - vpk) / std::abs(vpk);
        if (deriv_mismatch > 1e-5) {
            std::ostringstream msg;
            msg << "solve_radial: blow-up anchor inconsistent (mismatch " << deriv_mismatch
                << ")";
            throw numeric_error(msg.str());
        }
        const double s_star = ss.back() + sig;
        if (s_star < sigma_need + 1.0) continue; // seed too close; retry with more margin

        // Drop seed-contaminated samples and re-index by distance to the singularity.
        const double s_min_keep = (d == 4) ? 5.0 : 3.0;
        Orbit orbit;
        orbit.cs = cs;
        orbit.s_star = s_star;
        orbit.defect = defect;
        for (std::size_t i = ss.size(); i-- > 0;) {
            if (ss[i] < s_min_keep) break;
            const double sg = s_star - ss[i];
            if (sg <= 0.0) continue;
            orbit.sigma.push_back(sg);
            orbit.w.push_back(vs[i]);
            orbit.dw.push_back(-vps[i]);
        }
        if (orbit.sigma.size() < 16)
            throw numeric_error("solve_radial: orbit too short after anchoring");
        return orbit;
    }
    throw numeric_error("solve_radial: could not cover the requested radial range");
}

} // namespace

double SemilinearSolution::scaled_profile(double sigma) const {
    if (!(sigma > 0.0)) throw std::domain_error("scaled_profile: sigma must be positive");
    const SeriesCoeffs cs{series_c[0], series_c[1], series_c[2], series_c[3], series_c[4]};
    if (sigma < sigma_join) return series_w(cs, sigma);
    const auto& xs = orbit_sigma;
    if (sigma > xs.back())
        throw std::domain_error("scaled_profile: sigma beyond stored orbit");
    auto it = std::upper_bound(xs.begin(), xs.end(), sigma);
    std::size_t hi = std::min<std::size_t>(it - xs.begin(), xs.size() - 1);
    std::size_t lo = hi - 1;
    const double h = xs[hi] - xs[lo];
    const double t = (sigma - xs[lo]) / h;
    const double h00 = (1 + 2 * t) * (1 - t) * (1 - t);
    const double h10 = t * (1 - t) * (1 - t);
    const double h01 = t * t * (3 - 2 * t);
    const double h11 = t * t * (t - 1);
    return h00 * orbit_w[lo] + h10 * h * orbit_dw[lo] + h01 * orbit_w[hi] +
           h11 * h * orbit_dw[hi];
}

double SemilinearSolution::evaluate(double r) const {
    if (!(r > epsilon)) throw std::domain_error("evaluate: r must exceed epsilon");
    if (r > r_max * (1.0 + 1e-12))
        throw std::domain_error("evaluate: r beyond the solved range");
    const double sigma = std::log(r / epsilon);
    return scaled_profile(sigma) / (r * r);
}

SemilinearSolution solve_radial(const DimensionParams& params, double epsilon, double r_max,
                                double accuracy_scale) {
    if (!(epsilon > 0.0)) throw std::domain_error("solve_radial: epsilon must be positive");
    if (!(r_max > 10.0 * epsilon))
        throw std::domain_error("solve_radial: need r_max > 10 * epsilon");

    const double sigma_need = std::log(r_max / epsilon) + 2.0;
    Orbit orbit = integrate_orbit(params.d, sigma_need, accuracy_scale);

    SemilinearSolution sol;
    sol.params = params;
    sol.epsilon = epsilon;
    sol.r_max = r_max;
    sol.orbit_sigma = std::move(orbit.sigma);
    sol.orbit_w = std::move(orbit.w);
    sol.orbit_dw = std::move(orbit.dw);
    sol.series_c[0] = orbit.cs.c1;
    sol.series_c[1] = orbit.cs.c0;
    sol.series_c[2] = orbit.cs.cm1;
    sol.series_c[3] = orbit.cs.c2;
    sol.series_c[4] = orbit.cs.c3;
    sol.sigma_join = kSeriesJoin;
    sol.residual_norm = orbit.defect;

    // Sample grid: boundary layer in r/eps - 1, then log-spaced radii.
    std::vector<double> radii;
    for (double t = 1e-8; t < 1.0; t *= std::pow(10.0, 1.0 / 16.0))
        radii.push_back(epsilon * (1.0 + t));
    const int per_decade = 32;
    const double f = std::pow(10.0, 1.0 / per_decade);
    for (double r = 2.0 * epsilon; r < r_max; r *= f) radii.push_back(r);
    radii.push_back(r_max);
    sol.radii = radii;
    sol.u_values.resize(radii.size());
    for (std::size_t i = 0; i < radii.size(); ++i) sol.u_values[i] = sol.evaluate(radii[i]);

    // Far-field fit over the last two decades, slope pinned to the decay mode.
    const double slope = (params.d >= 5) ? 2.0 - params.d : -2.0;
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (radii[i] >= r_max / 100.0) {
            lx.push_back(std::log(radii[i]));
            ly.push_back(std::log(sol.u_values[i]));
        }
    }
    const LineFit fit = fit_line(lx, ly, slope);
    sol.farfield_amplitude = std::exp(fit.intercept);
    sol.farfield_fit_residual = fit.max_residual;
    return sol;
}

double exact_point_hitting(const DimensionParams& params, double distance) {
    if (params.d > 3)
        throw std::domain_error("exact_point_hitting: points are polar for d >= 4");
    if (!(distance > 0.0))
        throw std::domain_error("exact_point_hitting: distance must be positive");
    return (8.0 - 2.0 * params.d) / params.gamma / (distance * distance);
}

double iscoe_ratio(const SemilinearSolution& solution, double distance) {
    if (solution.params.d != 4) throw std::domain_error("iscoe_ratio: defined for d = 4");
    if (!(solution.epsilon < 1.0))
        throw std::domain_error("iscoe_ratio: requires epsilon < 1");
    if (!(distance > solution.epsilon) || !(distance < solution.r_max / 10.0))
        throw std::domain_error("iscoe_ratio: distance outside (epsilon, r_max/10)");
    const double w = solution.scaled_profile(std::log(distance / solution.epsilon));
    return w * std::log(1.0 / solution.epsilon);
}

KappaEstimate estimate_kappa(const SemilinearSolution& solution) {
    if (solution.params.d < 5)
        throw std::domain_error("estimate_kappa: requires d >= 5");
    if (solution.epsilon != 1.0)
        throw std::invalid_argument("estimate_kappa: solution must be computed at epsilon = 1");
    KappaEstimate est;
    est.kappa = solution.params.gamma * solution.farfield_amplitude;
    est.fit_residual = solution.farfield_fit_residual;
    return est;
}

} // namespace sbmocc
