#include "sbmocc/mathutil.hpp"

#include <algorithm>
#include <limits>

namespace sbmocc {

namespace {

double simpson(const std::function<double(double)>& f, double a, double fa, double b,
               double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const std::function<double(double)>& f, double a, double fa, double b,
             double fb, double fm, double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = simpson(f, a, fa, m, fm, flm);
    double right = simpson(f, m, fm, b, fb, frm);
    double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adapt(f, a, fa, m, fm, flm, left, 0.5 * tol, depth - 1) +
           adapt(f, m, fm, b, fb, frm, right, 0.5 * tol, depth - 1);
}

} // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int max_depth) {
    if (a == b) return 0.0;
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    double whole = simpson(f, a, fa, b, fb, fm);
    return adapt(f, a, fa, b, fb, fm, whole, tol, max_depth);
}

std::vector<double> cumulative_integral4(std::span<const double> g, double h,
                                         std::span<const std::size_t> breaks) {
    const std::size_t n = g.size();
    std::vector<double> P(n, 0.0);
    if (n < 2) return P;

    // Segment boundaries: 0, breaks..., n-1.
    std::vector<std::size_t> seg{0};
    for (std::size_t b : breaks)
        if (b > seg.back() && b < n - 1) seg.push_back(b);
    seg.push_back(n - 1);

    double acc = 0.0;
    for (std::size_t s = 0; s + 1 < seg.size(); ++s) {
        const std::size_t a = seg[s], b = seg[s + 1];
        const std::size_t len = b - a + 1;
        for (std::size_t i = a; i < b; ++i) {
            double panel;
            if (len < 4) {
                panel = 0.5 * h * (g[i] + g[i + 1]); // degenerate segment
            } else {
                // 4-point stencil fully inside [a, b]
                std::size_t st = (i == a) ? a : i - 1;
                if (st + 3 > b) st = b - 3;
                const double g0 = g[st], g1 = g[st + 1], g2 = g[st + 2], g3 = g[st + 3];
                switch (i - st) {
                case 0: panel = h * (9 * g0 + 19 * g1 - 5 * g2 + g3) / 24.0; break;
                case 1: panel = h * (-g0 + 13 * g1 + 13 * g2 - g3) / 24.0; break;
                default: panel = h * (g0 - 5 * g1 + 19 * g2 + 9 * g3) / 24.0; break;
                }
            }
            acc += panel;
            P[i + 1] = acc;
        }
    }
    return P;
}

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
    const std::size_t n = x_.size();
    m_.assign(n, 0.0);
    if (n < 2) return;
    std::vector<double> d(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i)
        d[i] = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]);
    m_[0] = d[0];
    m_[n - 1] = d[n - 2];
    for (std::size_t i = 1; i + 1 < n; ++i)
        m_[i] = (d[i - 1] * d[i] <= 0.0) ? 0.0 : 0.5 * (d[i - 1] + d[i]);
    // Fritsch-Carlson limiter
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (d[i] == 0.0) {
            m_[i] = m_[i + 1] = 0.0;
            continue;
        }
        double alpha = m_[i] / d[i], beta = m_[i + 1] / d[i];
        double s = alpha * alpha + beta * beta;
        if (s > 9.0) {
            double tau = 3.0 / std::sqrt(s);
            m_[i] = tau * alpha * d[i];
            m_[i + 1] = tau * beta * d[i];
        }
    }
}

double MonotoneCubic::operator()(double x) const {
    const std::size_t n = x_.size();
    if (n == 0) throw numeric_error("MonotoneCubic: empty interpolant");
    if (x <= x_.front()) return y_.front();
    if (x >= x_.back()) return y_.back();
    std::size_t hi = std::upper_bound(x_.begin(), x_.end(), x) - x_.begin();
    std::size_t lo = hi - 1;
    double hstep = x_[hi] - x_[lo];
    double t = (x - x_[lo]) / hstep;
    double h00 = (1 + 2 * t) * (1 - t) * (1 - t);
    double h10 = t * (1 - t) * (1 - t);
    double h01 = t * t * (3 - 2 * t);
    double h11 = t * t * (t - 1);
    return h00 * y_[lo] + h10 * hstep * m_[lo] + h01 * y_[hi] + h11 * hstep * m_[hi];
}

LineFit fit_line(std::span<const double> x, std::span<const double> y, double slope_fixed) {
    const std::size_t n = x.size();
    if (n == 0 || y.size() != n) throw numeric_error("fit_line: bad input");
    LineFit out;
    if (std::isfinite(slope_fixed)) {
        out.slope = slope_fixed;
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += y[i] - slope_fixed * x[i];
        out.intercept = s / double(n);
    } else {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t i = 0; i < n; ++i) {
            sx += x[i];
            sy += y[i];
            sxx += x[i] * x[i];
            sxy += x[i] * y[i];
        }
        double denom = double(n) * sxx - sx * sx;
        if (denom == 0.0) throw numeric_error("fit_line: degenerate abscissa");
        out.slope = (double(n) * sxy - sx * sy) / denom;
        out.intercept = (sy - out.slope * sx) / double(n);
    }
    for (std::size_t i = 0; i < n; ++i)
        out.max_residual =
            std::max(out.max_residual, std::abs(y[i] - out.slope * x[i] - out.intercept));
    return out;
}

} // namespace sbmocc
