#include "fractime/experiment.hpp"

#include <algorithm>
#include <cmath>

#include "fractime/common.hpp"
#include "fractime/rng.hpp"

namespace fractime {

double RatioReport::info_value(const std::string& key) const {
    for (const auto& [k, v] : info)
        if (k == key) return v;
    throw ConfigError("report '" + name + "' has no info key '" + key + "'");
}

void RatioReport::finalize(std::size_t min_scales) {
    if (rows.size() < min_scales)
        throw ConfigError("report '" + name + "': slope fit needs at least " +
                          std::to_string(min_scales) + " scales");
    std::vector<int> m;
    std::vector<double> v;
    constant = 0.0;
    for (const auto& r : rows) {
        m.push_back(r.scale);
        v.push_back(r.ratio);
        constant = std::max(constant, r.ratio);
    }
    auto f = fit_log2(m, v);
    slope = f.slope;
    residual = f.residual;
}

std::uint64_t cell_seed(std::uint64_t seed, int scale, int trial) {
    return Rng::derive(seed, std::uint64_t(scale) + 1, std::uint64_t(trial) + 1);
}

}  // namespace fractime
