#ifndef FRACTIME_KERNELS_HPP
#define FRACTIME_KERNELS_HPP

#include <vector>

#include "fractime/exponents.hpp"
#include "fractime/fracmeasure.hpp"
#include "fractime/fracset.hpp"

namespace fractime {

// K_r(t,s) = (1 + 2^{gamma j}|t-s|)^{-e} on a finite point set, with decay
// exponent e = d(1/2 - 1/r), or (d-1)(1/2 - 1/r) on the wave branch.
// Entries are evaluated on demand from exact |t - s|.
struct KernelMatrix {
    std::vector<double> points;
    double gamma = 2.0;
    int j = 0;
    double decay = 0.0;
    double scale = 1.0;  // 2^{gamma j}

    double entry(std::size_t row, std::size_t col) const {
        double g = scale * std::abs(points[row] - points[col]);
        return std::pow(1.0 + g, -decay);
    }
    std::size_t size() const { return points.size(); }

    // Dyadic band of a pair: 0 if 2^{gamma j}|t-s| <= 1, else the k >= 1 with
    // 2^{k-1} < 2^{gamma j}|t-s| <= 2^k.
    int band(std::size_t row, std::size_t col) const;
};

KernelMatrix kernel_matrix(std::vector<double> points, double gamma, int j, double r, int d,
                           Branch branch = Branch::Schrodinger);

// #A_k(tau') for every k up to max_band.
std::vector<long> band_counts(const KernelMatrix& K, std::size_t col, int max_band);

struct KernelNormRow {
    int j = 0;
    std::size_t n_points = 0;
    double strong = 0.0;        // max over columns of the l^s column norm
    double weak = 0.0;          // max over columns of the l^{s,inf} column norm
    double strong_ratio = 0.0;  // strong / [E]_alpha^{1/s}
    double weak_ratio = 0.0;
};

struct KernelNormReport {
    double s_exp = 0.0;
    double margin = 0.0;      // d(1/2 - 1/r) - alpha/s
    const char* claim = "";   // which column-norm bound applies at this pair
    double assouad_const = 0.0;
    std::vector<KernelNormRow> rows;
    double strong_trend = 0.0;  // fitted log2 slope across j
    double weak_trend = 0.0;
};

// Column norms of K_r over maximally separated subsets of E across a j range,
// normalized by [E]_alpha^{1/s}. The strict pair carries the strong-norm
// claim; the boundary pair carries the weak-norm claim.
KernelNormReport kernel_norm_check(const FractalSet& E, const ExponentConfig& cfg, double s_exp,
                                   int j_lo, int j_hi, double assouad_const);

// Measure variant: L^sigma(dmu) column norms against <mu>_alpha 2^{-gamma alpha j / sigma}.
KernelNormReport kernel_norm_check_measure(const AtomicMeasure& mu, const ExponentConfig& cfg,
                                           double sigma, int j_lo, int j_hi, double growth_const);

struct YoungReport {
    double lhs = 0.0;       // ||K a||_q
    double a_norm = 0.0;    // ||a||_p
    double bound_B = 0.0;   // max row/column l^s norm
    double realized = 0.0;  // lhs / (B ||a||_p)
    double s = 0.0;
};

// ||sum_{tau'} K(tau, tau') a_{tau'}||_q against B ||a||_p with
// 1/p - 1/q = 1 - 1/s.
YoungReport discrete_young_apply(const KernelMatrix& K, const std::vector<double>& a, double p,
                                 double q);

std::vector<double> kernel_matvec(const KernelMatrix& K, const std::vector<double>& a);
std::vector<double> kernel_matvec_serial(const KernelMatrix& K, const std::vector<double>& a);

}  // namespace fractime

#endif
