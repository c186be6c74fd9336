#include "fractime/mixednorm.hpp"

#include <algorithm>
#include <cmath>

namespace fractime {

void TimeSlices::validate() const {
    if (times.size() != fields.size()) throw ConfigError("time slices: times/fields mismatch");
    if (!weights.empty() && weights.size() != times.size())
        throw ConfigError("time slices: weights length mismatch");
    for (std::size_t i = 1; i < fields.size(); ++i)
        if (!fields[i].compatible(fields[0])) throw ConfigError("time slices: mixed grid geometry");
}

double weighted_lq(const std::vector<double>& norms, const std::vector<double>& weights, double q) {
    if (!weights.empty() && weights.size() != norms.size())
        throw ConfigError("weighted_lq: weights length mismatch");
    if (std::isinf(q)) {
        double m = 0.0;
        for (double v : norms) m = std::max(m, std::abs(v));
        return m;
    }
    if (!(q >= 1.0)) throw ConfigError("weighted_lq: q must be >= 1");
    double acc = 0.0;
    for (std::size_t i = 0; i < norms.size(); ++i)
        acc += (weights.empty() ? 1.0 : weights[i]) * std::pow(std::abs(norms[i]), q);
    return std::pow(acc, 1.0 / q);
}

double mixed_norm(const TimeSlices& slices, double q, double r, std::optional<double> window) {
    slices.validate();
    std::vector<double> norms(slices.fields.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < slices.fields.size(); ++i)
        norms[i] = lr_norm_serial(slices.fields[i], r, window);
    return weighted_lq(norms, slices.weights, q);
}

double discrete_norm(const std::vector<double>& values, double q) {
    return weighted_lq(values, {}, q);
}

double weak_norm(std::vector<double> values, double s) {
    if (!(s > 1.0) || std::isinf(s)) throw ConfigError("weak_norm: s must lie in (1, inf)");
    for (auto& v : values) v = std::abs(v);
    std::sort(values.begin(), values.end(), std::greater<double>());
    double best = 0.0;
    for (std::size_t m = 1; m <= values.size(); ++m)
        best = std::max(best, std::pow(double(m), 1.0 / s) * values[m - 1]);
    return best;
}

Quadrature interval_quadrature(const std::vector<Interval>& intervals, double max_spacing,
                               int min_nodes) {
    if (min_nodes < 1) throw ConfigError("interval_quadrature: min_nodes must be >= 1");
    Quadrature quad;
    for (const auto& iv : intervals) {
        double len = iv.length();
        if (!(len > 0.0)) continue;
        int nodes = std::max<long>(min_nodes, (long)std::ceil(len / max_spacing));
        double h = len / nodes;
        for (int i = 0; i < nodes; ++i) {
            quad.nodes.push_back(iv.lo + (i + 0.5) * h);
            quad.weights.push_back(h);
        }
    }
    return quad;
}

}  // namespace fractime
