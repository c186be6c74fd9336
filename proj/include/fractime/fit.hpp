#ifndef FRACTIME_FIT_HPP
#define FRACTIME_FIT_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "fractime/common.hpp"

namespace fractime {

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double residual = 0.0;  // rms of fit residuals
};

// Least-squares line through (x_i, y_i).
inline LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw ConfigError("line fit needs at least 2 samples");
    const std::size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    double det = n * sxx - sx * sx;
    LineFit f;
    f.slope = (n * sxy - sx * sy) / det;
    f.intercept = (sy - f.slope * sx) / n;
    double ss = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double r = y[i] - (f.slope * x[i] + f.intercept);
        ss += r * r;
    }
    f.residual = std::sqrt(ss / n);
    return f;
}

// Slope of log2(v) against the integer scale exponents m.
inline LineFit fit_log2(const std::vector<int>& m, const std::vector<double>& v) {
    std::vector<double> x(m.size()), y(v.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        x[i] = m[i];
        y[i] = std::log2(v[i]);
    }
    return fit_line(x, y);
}

}  // namespace fractime

#endif
