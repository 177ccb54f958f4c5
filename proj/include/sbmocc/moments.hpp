#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "sbmocc/grid.hpp"
#include "sbmocc/kernel.hpp"
#include "sbmocc/testfn.hpp"

namespace sbmocc {

// Sampled radial moment function M_p(r) of the occupation integral against the
// scaled test function, one table per order p.  Values are the truncated
// integrals over [0, r_max]; truncation_bound bounds the discarded tail
// (infinite when the tail integral diverges, which happens for d = 3, p >= 2).
struct MomentTable {
    int order = 0;
    GridPtr grid;
    DimensionParams params;
    TestFunctionSpec spec;
    std::vector<double> values;
    double value_at_zero = 0.0;
    double truncation_bound = 0.0;

    double value_at(double s) const; // s = 0 or s in [r0, rmax]; off-node interpolates
    double max_tail_rel_error() const;

private:
    friend MomentTable first_moment(const GridPtr&, const TestFunctionSpec&,
                                    const DimensionParams&);
    friend MomentTable moment_recursion(std::span<const MomentTable>, bool);
    mutable std::vector<double> interp_cache_;
};

// Order-1 table: radial quadrature of the kernel against the test function.
MomentTable first_moment(const GridPtr& grid, const TestFunctionSpec& spec,
                         const DimensionParams& params);

// Order-p table from orders 1..p-1 (binomial convolution against the
// sphere-averaged kernel).  half_sum evaluates only j <= p/2 and doubles,
// exercising the symmetry of the convolution.
MomentTable moment_recursion(std::span<const MomentTable> lower_orders,
                             bool half_sum = false);

// Convenience: tables for orders 1..p_max.
std::vector<MomentTable> build_moment_tables(const GridPtr& grid,
                                             const TestFunctionSpec& spec,
                                             const DimensionParams& params, int p_max);

// Kernel-domination constant: sup_s [int K(s,r) (r^{2-d} ^ 1)^2 dV] / (s^{2-d} ^ 1).
// Finite only for d >= 5.
double a_d_constant(const DimensionParams& params);

struct TechConstants {
    double a_d = 0.0;
    std::vector<double> C;         // C[p-1] = C_{p,d}, p = 1..p_max
    double growth_certificate = 0; // smallest K with C_{p,d} <= K^p
};
TechConstants tech_constants(const DimensionParams& params, int p_max);

struct LimitMoments {
    std::vector<double> m; // m[p-1], p = 1..p_max
    double truncation_bound = 0.0;
};
// Limiting conditioned moments for d >= 5 from tables at epsilon = 1 and the
// hitting amplitude kappa_d.
LimitMoments highdim_limit_moments(std::span<const MomentTable> tables, double kappa_d,
                                   const TestFunctionSpec& spec);

// M_p(s) normalised by p! (phi_bar / 2 pi^2)^p s^{-2} eps^{4p} log(s/eps)^{p-1}.
double d4_asymptotic_ratio(const MomentTable& table, double s);

// CSV export: columns r, M_1..M_p.  JSON metadata alongside.
void export_tables_csv(std::span<const MomentTable> tables, std::ostream& os);
std::string tables_metadata_json(std::span<const MomentTable> tables);

} // namespace sbmocc
