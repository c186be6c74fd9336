#ifndef FRACTIME_SHARPNESS_HPP
#define FRACTIME_SHARPNESS_HPP

#include "fractime/experiment.hpp"
#include "fractime/exponents.hpp"
#include "fractime/fracmeasure.hpp"
#include "fractime/fracset.hpp"

namespace fractime {

struct NecessityConfig {
    ExponentConfig exps;      // d, gamma, alpha, q, r, s
    int j_lo = 4;
    int j_hi = 9;             // band range for the j-slope experiments
    int m_lo = 4;
    int m_hi = 12;            // cap range for the m-slope experiments
    int gap = 8;              // enforce gamma j >= m + gap
    double window_c = 0.125;  // tube/time-window constant c
    double L = 16.0;
    int max_n = 1 << 17;
};

// Every necessity report carries the closed-form exponent from the packet
// computation next to the measured slope; pass means
// |measured - predicted| <= 0.3 |predicted| + 0.05.
struct NecessityReport {
    std::string name;
    double predicted = 0.0;
    double measured = 0.0;
    bool pass = false;
    RatioReport ratios;
    std::vector<std::pair<std::string, double>> extra;

    void add_extra(const std::string& k, double v) { extra.emplace_back(k, v); }
    void judge() {
        measured = ratios.slope;
        pass = std::abs(measured - predicted) <= 0.3 * std::abs(predicted) + 0.05;
    }
};

// Full-shell packet against the regularity condition: the ratio over the
// refocusing window is flat exactly when s hits s_gamma(q, r); the measured
// j-slope is s_gamma - s.
NecessityReport necessity_conreg(const NecessityConfig& nc);

// Cap packets on the Cantor set at fixed large j; the m-slope of the
// windowed Strichartz ratio is d/(2r) + alpha/q - d/4, positive exactly when
// the admissibility condition fails. Includes gap sensitivity columns.
NecessityReport necessity_conad(const NecessityConfig& nc);

// Same packet family against the Cantor-measure mixed norm, plus the window
// mass check mu(J) >= c 2^{alpha m} 2^{-alpha gamma j}.
NecessityReport necessity_measure(const NecessityConfig& nc);

// Cap width m = j against the local-smoothing norm; the slope flips sign at
// s = alpha(1 - gamma)/2.
NecessityReport necessity_smoothing(const NecessityConfig& nc);

// Realized constant of the refocusing tube bound |U_t f| >= c 2^{dj - dm/2}.
struct TubeReport {
    double c_min = 1.0;  // min over the (j, m) grid and tube samples
    struct Cell {
        int j, m;
        double c;
    };
    std::vector<Cell> cells;
};

TubeReport tube_lower_bound(const NecessityConfig& nc, const std::vector<int>& js,
                            const std::vector<int>& ms);

}  // namespace fractime

#endif
