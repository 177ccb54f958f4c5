#pragma once

#include <cstddef>
#include <memory>
#include <vector>

namespace sbmocc {

// Log-spaced radial grid anchored at epsilon: node i sits at
// epsilon * 10^{(i - i_eps) / nodes_per_decade}.  Kernel kinks land on nodes
// because query radii are restricted to nodes (off-node queries interpolate).
struct RadialGrid {
    double epsilon = 0.0;
    int nodes_per_decade = 512;
    std::size_t i_eps = 0; // index of the node at exactly epsilon
    std::vector<double> r;
    double log_step = 0.0; // ln(r_{i+1}/r_i), constant

    static RadialGrid make(double epsilon, double max_query_radius,
                           int nodes_per_decade = 512, double lo_factor = 1e-3,
                           double hi_factor = 1e4);

    std::size_t size() const { return r.size(); }
    double r0() const { return r.front(); }
    double rmax() const { return r.back(); }
    bool covers(double radius) const { return radius >= r0() && radius <= rmax(); }

    // Index of the node closest to radius (in log distance).
    std::size_t nearest_index(double radius) const;
    bool same_layout(const RadialGrid& other) const;
};

using GridPtr = std::shared_ptr<const RadialGrid>;

} // namespace sbmocc
