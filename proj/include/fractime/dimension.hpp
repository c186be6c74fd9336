#ifndef FRACTIME_DIMENSION_HPP
#define FRACTIME_DIMENSION_HPP

#include <optional>
#include <vector>

#include "fractime/fit.hpp"
#include "fractime/fracset.hpp"

namespace fractime {

struct MinkowskiReport {
    std::vector<int> m;        // dyadic exponents, delta = 2^{-m}
    std::vector<long> counts;  // N(E, 2^{-m})
    double slope = 0.0;
    double residual = 0.0;
};

// delta = 2^{-m} over [m_lo, m_hi] in steps of m_step.
MinkowskiReport minkowski_estimate(const FractalSet& E, int m_lo, int m_hi, int m_step = 1);

// Dyadic sampling plan for the multi-scale characteristics. Windows have
// size 2^{-mp} for mp in [window_lo, window_hi]; covering scales are
// 2^{-m} with m in [mp, delta_hi]. Window centers run over the set's
// representative points, subsampled to at most max_centers.
struct ScalePlan {
    int window_lo = 0;
    int window_hi = 8;
    int delta_hi = 12;
    int max_centers = 48;
    bool windows_in_unit = false;  // restrict windows to [0,1] (Assouad-dimension convention)
};

// Plan covering every faithful scale of the realization.
ScalePlan default_plan(const FractalSet& E);

struct ScaleRow {
    double window = 0.0;
    double delta = 0.0;
    long count = 0;
    double ratio = 0.0;
};

struct AssouadReport {
    double alpha = 0.0;
    double sup_value = 0.0;
    ScaleRow argmax;
    std::vector<ScaleRow> table;  // one row per (window, delta) pair, max over centers
    int scale_lo = 0;
    int scale_hi = 0;
};

// Sampled sup of (delta/|I|)^alpha N(E ∩ I, delta).
AssouadReport assouad_characteristic(const FractalSet& E, double alpha, const ScalePlan& plan);

struct SpectrumReport {
    double theta = 0.0;
    double alpha = 0.0;
    double sup_value = 0.0;
    ScaleRow argmax;
    std::vector<ScaleRow> table;
};

// Sampled sup of (|I|^{1/theta - 1})^alpha N(E ∩ I, |I|^{1/theta}); windows in [0,1].
SpectrumReport spectrum_characteristic(const FractalSet& E, double alpha, double theta,
                                       const ScalePlan& plan);

}  // namespace fractime

#endif
