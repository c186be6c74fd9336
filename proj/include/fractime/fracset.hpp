#ifndef FRACTIME_FRACSET_HPP
#define FRACTIME_FRACSET_HPP

#include <memory>
#include <string>
#include <vector>

#include "fractime/common.hpp"

namespace fractime {

struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    double length() const { return hi - lo; }
    bool degenerate() const { return hi == lo; }
};

enum class SetKind { Cantor, Power, Explicit, Affine, Union };

// A subset of R described by a generator and realized, at construction time,
// as a sorted list of disjoint closed intervals (degenerate intervals are
// points). Immutable after construction; safe to share across threads.
//
// Cantor(alpha, k) is the step-k stage of the construction: 2^k closed
// intervals of length 2^{-k/alpha}. Its representative points are the right
// endpoints, one per interval. resolution() is the stage scale 2^{-k/alpha};
// queries are answered exactly for scales >= resolution()/4, below which the
// stage stops being a faithful proxy of the limit set and a ResolutionError
// is raised.
class FractalSet {
  public:
    static FractalSet cantor(double alpha, int depth);
    static FractalSet power_sequence(double a, long count);
    // Picks the count so that the gap n^{-a} - (n+1)^{-a} at the cluster
    // point drops below target_resolution.
    static FractalSet power_sequence_for_resolution(double a, double target_resolution);
    static FractalSet explicit_points(std::vector<double> points);
    static FractalSet affine_image(const FractalSet& base, double scale, double shift);
    static FractalSet set_union(const std::vector<FractalSet>& parts);
    static FractalSet uniform_grid(double lo, double hi, long n);  // explicit dense proxy of [lo,hi]

    SetKind kind() const { return kind_; }
    const std::vector<Interval>& intervals() const { return intervals_; }
    const std::vector<double>& representatives() const { return reps_; }
    Interval bounds() const { return bounds_; }
    double resolution() const { return resolution_; }
    double diameter() const { return bounds_.hi - bounds_.lo; }

    // Generator parameters (meaningful per kind).
    double cantor_alpha() const { return alpha_; }
    int cantor_depth() const { return depth_; }
    double power_exponent() const { return a_; }
    long power_count() const { return count_; }
    double power_cluster_gap() const { return cluster_gap_; }

    std::string describe() const;

    // Raises ResolutionError when the requested scale falls below the
    // faithful range of this realization (scale >= resolution/4).
    void check_scale(double scale, const char* op) const;

  private:
    FractalSet() = default;
    void finalize(std::vector<Interval> ivs);

    SetKind kind_ = SetKind::Explicit;
    double alpha_ = 0.0;
    int depth_ = 0;
    double a_ = 0.0;
    long count_ = 0;
    double cluster_gap_ = 0.0;

    std::vector<Interval> intervals_;
    std::vector<double> reps_;
    Interval bounds_;
    double resolution_ = 0.0;
};

// Minimal number of closed length-delta intervals covering E ∩ I, by the
// greedy left-to-right sweep (optimal in one dimension).
long covering_number(const FractalSet& E, Interval I, double delta);

// E(delta) = {x : dist(x, E) < delta} as a minimal list of disjoint open
// intervals.
std::vector<Interval> neighborhood(const FractalSet& E, double delta);

inline double total_length(const std::vector<Interval>& ivs) {
    double s = 0;
    for (const auto& iv : ivs) s += iv.length();
    return s;
}

// A maximally 2^{-gamma j}-separated subset of E, selected greedily from the
// representative points.
struct SeparatedSet {
    std::vector<double> points;
    double spacing = 0.0;
    int j = 0;
    double gamma = 0.0;
    // I_tau = (tau - 2 spacing, tau + 2 spacing)
    std::vector<Interval> intervals() const {
        std::vector<Interval> out;
        out.reserve(points.size());
        for (double t : points) out.push_back({t - 2 * spacing, t + 2 * spacing});
        return out;
    }
};

SeparatedSet separated_subset(const FractalSet& E, double gamma, int j);

}  // namespace fractime

#endif
