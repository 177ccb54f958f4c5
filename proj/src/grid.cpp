#include "sbmocc/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sbmocc/errors.hpp"

namespace sbmocc {

RadialGrid RadialGrid::make(double epsilon, double max_query_radius, int nodes_per_decade,
                            double lo_factor, double hi_factor) {
    if (!(epsilon > 0.0)) throw std::domain_error("RadialGrid: epsilon must be positive");
    if (!(max_query_radius > 0.0))
        throw std::domain_error("RadialGrid: max query radius must be positive");
    if (nodes_per_decade < 8) throw config_error("RadialGrid: nodes_per_decade too small");
    if (!(lo_factor <= 0.1))
        throw config_error("RadialGrid: grid must start at or below epsilon/10");

    RadialGrid g;
    g.epsilon = epsilon;
    g.nodes_per_decade = nodes_per_decade;
    g.log_step = std::numbers::ln10_v<double> / nodes_per_decade;

    const long below = std::lround(std::ceil(-std::log10(lo_factor) * nodes_per_decade));
    const double hi_target = hi_factor * max_query_radius;
    const long above =
        std::lround(std::ceil(std::log10(hi_target / epsilon) * nodes_per_decade));
    if (above < nodes_per_decade)
        throw config_error("RadialGrid: upper end must clear epsilon by a decade");

    g.i_eps = static_cast<std::size_t>(below);
    g.r.resize(static_cast<std::size_t>(below + above + 1));
    const double leps = std::log(epsilon);
    for (std::size_t i = 0; i < g.r.size(); ++i)
        g.r[i] = std::exp(leps + (double(i) - double(below)) * g.log_step);
    g.r[g.i_eps] = epsilon; // exact anchor
    return g;
}

std::size_t RadialGrid::nearest_index(double radius) const {
    if (!(radius > 0.0)) throw std::domain_error("RadialGrid: radius must be positive");
    const double k = std::log(radius / epsilon) / log_step + double(i_eps);
    long idx = std::lround(k);
    idx = std::clamp<long>(idx, 0, long(r.size()) - 1);
    return static_cast<std::size_t>(idx);
}

bool RadialGrid::same_layout(const RadialGrid& other) const {
    return r.size() == other.r.size() && i_eps == other.i_eps &&
           nodes_per_decade == other.nodes_per_decade && epsilon == other.epsilon;
}

} // namespace sbmocc
