#ifndef FRACTIME_EXPERIMENT_HPP
#define FRACTIME_EXPERIMENT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fractime/fit.hpp"

namespace fractime {

// One per-scale measurement of an estimate ratio. "scale" is the dyadic
// index the slope is fitted against (the band j for homogeneous runs, the
// cap parameter m for the necessity runs).
struct RatioRow {
    int scale = 0;
    double ratio = 0.0;
    double numerator = 0.0;
    double denominator = 0.0;
    std::uint64_t seed = 0;
};

struct RatioReport {
    std::string name;
    std::vector<RatioRow> rows;
    double slope = 0.0;
    double residual = 0.0;
    double constant = 0.0;  // max ratio over the rows
    std::vector<std::pair<std::string, double>> info;

    void add_info(const std::string& key, double value) { info.emplace_back(key, value); }
    double info_value(const std::string& key) const;

    // Least-squares log2 slope across the rows.
    void finalize(std::size_t min_scales = 4);
};

// Seed for one experiment cell; stable under any execution order.
std::uint64_t cell_seed(std::uint64_t seed, int scale, int trial);

}  // namespace fractime

#endif
