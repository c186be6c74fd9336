#include "fractime/fracmeasure.hpp"

#include <algorithm>
#include <cmath>

#include "fractime/fracset.hpp"

namespace fractime {

AtomicMeasure::AtomicMeasure(std::vector<double> positions, std::vector<double> weights,
                             double alpha, double resolution, int depth)
    : pos_(std::move(positions)), w_(std::move(weights)), alpha_(alpha), resolution_(resolution), depth_(depth) {
    if (pos_.empty() || pos_.size() != w_.size())
        throw ConfigError("atomic measure: positions/weights mismatch");
    for (std::size_t i = 0; i < pos_.size(); ++i) {
        if (!(w_[i] > 0.0)) throw ConfigError("atomic measure: weights must be positive");
        if (i > 0 && !(pos_[i] > pos_[i - 1]))
            throw ConfigError("atomic measure: positions must be strictly increasing");
    }
    prefix_.resize(pos_.size() + 1);
    prefix_[0] = 0.0;
    for (std::size_t i = 0; i < pos_.size(); ++i) prefix_[i + 1] = prefix_[i] + w_[i];
}

double AtomicMeasure::ball_mass(double t, double rho) const {
    if (!(rho >= resolution_))
        throw ResolutionError("ball_mass: radius " + std::to_string(rho) +
                              " is below the measure resolution " + std::to_string(resolution_));
    auto lo = std::upper_bound(pos_.begin(), pos_.end(), t - rho);  // first > t - rho
    auto hi = std::lower_bound(pos_.begin(), pos_.end(), t + rho);  // first >= t + rho
    return prefix_[hi - pos_.begin()] - prefix_[lo - pos_.begin()];
}

AtomicMeasure cantor_measure(double alpha, int k) {
    FractalSet E = FractalSet::cantor(alpha, k);
    // Dyadic weights sum to exactly 1 in binary floating point.
    double w = std::exp2(-k);
    std::vector<double> weights(E.representatives().size(), w);
    return AtomicMeasure(E.representatives(), std::move(weights), alpha, E.resolution(), k);
}

AtomicMeasure lebesgue_proxy(long n) {
    if (n < 2) throw ConfigError("lebesgue_proxy: need n >= 2");
    std::vector<double> pos(n), w(n, 1.0 / double(n));
    for (long i = 0; i < n; ++i) pos[i] = (double(i) + 0.5) / double(n);
    return AtomicMeasure(std::move(pos), std::move(w), 1.0, 1.0 / double(n));
}

GrowthReport growth_constant(const AtomicMeasure& mu, double alpha, int max_centers) {
    if (max_centers < 1) throw ConfigError("growth_constant: empty sample plan");
    const auto& pos = mu.positions();
    std::vector<double> centers;
    if ((int)pos.size() <= max_centers) {
        centers = pos;
    } else {
        for (int i = 0; i < max_centers; ++i)
            centers.push_back(pos[(std::size_t)((double(i) + 0.5) / max_centers * pos.size())]);
    }
    double rho_max = std::max(mu.diameter(), mu.resolution());
    GrowthReport rep;
    for (double rho = rho_max; rho >= mu.resolution(); rho /= 2.0) {
        for (double c : centers) {
            double v = mu.ball_mass(c, rho) / std::pow(rho, alpha);
            rep.samples += 1;
            if (v > rep.value) {
                rep.value = v;
                rep.arg_center = c;
                rep.arg_radius = rho;
            }
        }
        if (rho == mu.resolution()) break;
        if (rho / 2.0 < mu.resolution()) rho = 2.0 * mu.resolution();  // include the floor scale
    }
    if (rep.samples == 0) throw ConfigError("growth_constant: empty sample plan");
    return rep;
}

}  // namespace fractime
