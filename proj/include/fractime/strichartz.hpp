#ifndef FRACTIME_STRICHARTZ_HPP
#define FRACTIME_STRICHARTZ_HPP

#include <cstdint>
#include <optional>

#include "fractime/experiment.hpp"
#include "fractime/exponents.hpp"
#include "fractime/fracmeasure.hpp"
#include "fractime/fracset.hpp"
#include "fractime/mixednorm.hpp"
#include "fractime/spectral.hpp"

namespace fractime {

// Smallest cantor depth whose stage scale 2^{-k/alpha} reaches the target.
int cantor_depth_for_scale(double alpha, double scale);

enum class HomForm { Measure, Set };

struct HomogeneousConfig {
    ExponentConfig exps;
    HomForm form = HomForm::Measure;
    int j_lo = 4;
    int j_hi = 9;
    int trials = 20;
    std::uint64_t seed = 1;
    double L = 16.0;
    int max_n = 1 << 14;
    int nodes_per_interval = 8;  // E(2^{-gamma j}) quadrature knob
};

// Per-band ratio experiment for the homogeneous estimates: random band-2^j
// inputs, ratio of the mixed norm against C^{1/q} ||f||_{H^s}, max over
// trials, slope fitted across j. The max over random draws estimates the
// operator norm from below.
RatioReport homogeneous_experiment(const HomogeneousConfig& hc, const FractalSet* E,
                                   const AtomicMeasure* mu);

// B_k(F, G) = sum over pairs at dyadic separation k of
// <T_{tau,tau'} F(tau), G(tau')> with T_{t,s} = U_t P_j (U_s P_j)^*.
struct BandFormResult {
    cplx value{0, 0};
    double bound = 0.0;  // the k-local estimate's right side
    double ratio = 0.0;
    bool empty = false;
    long pairs = 0;
};

BandFormResult bilinear_Bk(const std::vector<double>& taus, const std::vector<GridFunction>& F,
                           const std::vector<GridFunction>& G, int k, int j, double gamma,
                           const Rat& alpha, const Rat& a, const Rat& b, double assouad_const);

// || sum_tau (U_tau P_j)^* F(tau) ||_2^2; equals sum_k B_k(F, F).
double dual_form_norm_sq(const std::vector<double>& taus, const std::vector<GridFunction>& F,
                         int j, double gamma);

// sup_x of the T_{t,s} kernel at time separation tau (band j), for the
// dispersive-decay checks.
double tt_kernel_sup(int d, double L, int n, int j, double gamma, double tau);

}  // namespace fractime

#endif
