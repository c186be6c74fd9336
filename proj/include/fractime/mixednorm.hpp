#ifndef FRACTIME_MIXEDNORM_HPP
#define FRACTIME_MIXEDNORM_HPP

#include <optional>
#include <vector>

#include "fractime/fracset.hpp"
#include "fractime/grid.hpp"

namespace fractime {

// A field sampled at finitely many times, optionally paired with atomic
// measure weights. All slices share one grid geometry.
struct TimeSlices {
    std::vector<double> times;
    std::vector<GridFunction> fields;
    std::vector<double> weights;  // empty = unweighted

    void validate() const;
};

// (sum_i w_i ||F(t_i)||_{L^r}^q)^{1/q}; q = inf takes the max over slices.
// spatial_window restricts the L^r quadrature to |x| <= radius.
double mixed_norm(const TimeSlices& slices, double q, double r,
                  std::optional<double> spatial_window = std::nullopt);

// The weighted l^q reduction on precomputed slice norms.
double weighted_lq(const std::vector<double>& norms, const std::vector<double>& weights, double q);

// Plain l^q of a finite list.
double discrete_norm(const std::vector<double>& values, double q);

// l^{s,infty}: sup_m m^{1/s} a*_m over the decreasing rearrangement.
double weak_norm(std::vector<double> values, double s);

// Midpoint quadrature nodes/weights over a list of disjoint intervals with
// node spacing <= max_spacing and at least min_nodes per interval.
struct Quadrature {
    std::vector<double> nodes;
    std::vector<double> weights;
};
Quadrature interval_quadrature(const std::vector<Interval>& intervals, double max_spacing,
                               int min_nodes);

}  // namespace fractime

#endif
