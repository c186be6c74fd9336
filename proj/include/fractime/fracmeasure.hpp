#ifndef FRACTIME_FRACMEASURE_HPP
#define FRACTIME_FRACMEASURE_HPP

#include <vector>

#include "fractime/common.hpp"

namespace fractime {

// Finite weighted point masses approximating a fractal measure. The atomic
// stage is a faithful proxy of the limit measure only for balls of radius
// >= resolution, which every downstream estimate respects.
class AtomicMeasure {
  public:
    AtomicMeasure(std::vector<double> positions, std::vector<double> weights, double alpha,
                  double resolution, int depth = -1);

    const std::vector<double>& positions() const { return pos_; }
    const std::vector<double>& weights() const { return w_; }
    double alpha() const { return alpha_; }
    double resolution() const { return resolution_; }
    int depth() const { return depth_; }
    double total_mass() const { return prefix_.back(); }
    double diameter() const { return pos_.back() - pos_.front(); }
    std::size_t size() const { return pos_.size(); }

    // mu((t - rho, t + rho)), open ball.
    double ball_mass(double t, double rho) const;

    template <typename H>
    double integrate(H&& h) const {
        double s = 0.0;
        for (std::size_t i = 0; i < pos_.size(); ++i) s += w_[i] * h(pos_[i]);
        return s;
    }

  private:
    std::vector<double> pos_;
    std::vector<double> w_;
    std::vector<double> prefix_;  // prefix_[i] = sum of w_[0..i)
    double alpha_ = 0.0;
    double resolution_ = 0.0;
    int depth_ = -1;
};

// One atom of weight 2^{-k} at the right endpoint of each step-k interval.
AtomicMeasure cantor_measure(double alpha, int k);

// Uniform atoms on [0,1]; stands in for the Lebesgue measure (alpha = 1).
AtomicMeasure lebesgue_proxy(long n);

struct GrowthReport {
    double value = 0.0;     // max of ball_mass / rho^alpha over the sample plan
    double arg_center = 0.0;
    double arg_radius = 0.0;
    long samples = 0;
};

// <mu>_alpha over dyadic radii in [resolution, diameter] and centers drawn
// from the atoms (subsampled to max_centers).
GrowthReport growth_constant(const AtomicMeasure& mu, double alpha, int max_centers = 128);

}  // namespace fractime

#endif
