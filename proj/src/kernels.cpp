#include "fractime/kernels.hpp"

#include <algorithm>
#include <cmath>

#include "fractime/fit.hpp"
#include "fractime/mixednorm.hpp"

namespace fractime {

int KernelMatrix::band(std::size_t row, std::size_t col) const {
    double g = scale * std::abs(points[row] - points[col]);
    if (g <= 1.0) return 0;
    return std::max(1, int(std::ceil(std::log2(g))));
}

KernelMatrix kernel_matrix(std::vector<double> points, double gamma, int j, double r, int d,
                           Branch branch) {
    if (!std::is_sorted(points.begin(), points.end()))
        throw ConfigError("kernel_matrix: points must be sorted");
    KernelMatrix K;
    K.points = std::move(points);
    K.gamma = gamma;
    K.j = j;
    double dim = branch == Branch::Wave ? d - 1 : d;
    double rinv = std::isinf(r) ? 0.0 : 1.0 / r;
    K.decay = dim * (0.5 - rinv);
    K.scale = std::exp2(gamma * j);
    return K;
}

std::vector<long> band_counts(const KernelMatrix& K, std::size_t col, int max_band) {
    std::vector<long> counts(max_band + 1, 0);
    for (std::size_t i = 0; i < K.size(); ++i) {
        int k = K.band(i, col);
        if (k <= max_band) counts[k] += 1;
    }
    return counts;
}

namespace {

struct ColumnNorms {
    double strong;
    double weak;
};

// Max over columns of the strong and weak l^s column norms; symmetric
// matrices make row sups identical.
ColumnNorms max_column_norms(const KernelMatrix& K, double s) {
    const std::size_t n = K.size();
    std::vector<double> strong(n), weak(n);
#pragma omp parallel for schedule(dynamic)
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<double> col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = K.entry(i, c);
        strong[c] = discrete_norm(col, s);
        weak[c] = weak_norm(col, s);
    }
    ColumnNorms out{0.0, 0.0};
    for (std::size_t c = 0; c < n; ++c) {
        out.strong = std::max(out.strong, strong[c]);
        out.weak = std::max(out.weak, weak[c]);
    }
    return out;
}

}  // namespace

KernelNormReport kernel_norm_check(const FractalSet& E, const ExponentConfig& cfg, double s_exp,
                                   int j_lo, int j_hi, double assouad_const) {
    if (!(s_exp > 1.0)) throw ConfigError("kernel_norm_check: s must be > 1");
    KernelNormReport rep;
    rep.s_exp = s_exp;
    rep.assouad_const = assouad_const;
    double gamma = cfg.gamma.value();
    double margin = cfg.decay_exponent().value() - cfg.alpha.value() / s_exp;
    rep.margin = margin;
    if (margin > 1e-12) {
        rep.claim = "strong";
    } else if (std::abs(margin) <= 1e-12) {
        rep.claim = "weak";
    } else {
        throw ConfigError(
            "kernel_norm_check: d(1/2 - 1/r) < alpha/s, neither the strong nor the weak "
            "column-norm bound applies at this pair");
    }
    double norm_const = std::pow(assouad_const, 1.0 / s_exp);
    std::vector<int> js;
    std::vector<double> strongs, weaks;
    for (int j = j_lo; j <= j_hi; ++j) {
        auto Ej = separated_subset(E, gamma, j);
        auto K = kernel_matrix(Ej.points, gamma, j, cfg.r.value(), cfg.d, cfg.branch());
        auto norms = max_column_norms(K, s_exp);
        KernelNormRow row;
        row.j = j;
        row.n_points = Ej.points.size();
        row.strong = norms.strong;
        row.weak = norms.weak;
        row.strong_ratio = norms.strong / norm_const;
        row.weak_ratio = norms.weak / norm_const;
        rep.rows.push_back(row);
        js.push_back(j);
        strongs.push_back(norms.strong);
        weaks.push_back(norms.weak);
    }
    if (js.size() >= 2) {
        rep.strong_trend = fit_log2(js, strongs).slope;
        rep.weak_trend = fit_log2(js, weaks).slope;
    }
    return rep;
}

KernelNormReport kernel_norm_check_measure(const AtomicMeasure& mu, const ExponentConfig& cfg,
                                           double sigma, int j_lo, int j_hi, double growth_const) {
    if (!(sigma > 1.0)) throw ConfigError("kernel_norm_check_measure: sigma must be > 1");
    KernelNormReport rep;
    rep.s_exp = sigma;
    rep.assouad_const = growth_const;
    double gamma = cfg.gamma.value();
    double alpha = cfg.alpha.value();
    double margin = cfg.decay_exponent().value() - alpha / sigma;
    rep.margin = margin;
    if (margin > 1e-12)
        rep.claim = "strong";
    else if (std::abs(margin) <= 1e-12)
        rep.claim = "weak";
    else
        throw ConfigError("kernel_norm_check_measure: d(1/2 - 1/r) < alpha/sigma");

    const auto& pos = mu.positions();
    const auto& w = mu.weights();
    for (int j = j_lo; j <= j_hi; ++j) {
        auto K = kernel_matrix(pos, gamma, j, cfg.r.value(), cfg.d, cfg.branch());
        double norm_const = growth_const * std::exp2(-gamma * alpha * j / sigma);
        const std::size_t n = pos.size();
        std::vector<double> strong(n), weak(n);
#pragma omp parallel for schedule(dynamic)
        for (std::size_t c = 0; c < n; ++c) {
            double acc = 0.0;
            std::vector<double> masses;
            masses.reserve(n);
            for (std::size_t i = 0; i < n; ++i) {
                double e = K.entry(i, c);
                acc += w[i] * std::pow(e, sigma);
                masses.push_back(e);
            }
            strong[c] = std::pow(acc, 1.0 / sigma);
            // L^{sigma,inf}(dmu): sup_lambda lambda mu(K > lambda)^{1/sigma};
            // atoms sorted by entry give the discrete sup.
            std::vector<std::size_t> order(n);
            for (std::size_t i = 0; i < n; ++i) order[i] = i;
            std::sort(order.begin(), order.end(),
                      [&](std::size_t a, std::size_t b) { return masses[a] > masses[b]; });
            double cum = 0.0, best = 0.0;
            for (std::size_t i : order) {
                cum += w[i];
                best = std::max(best, masses[i] * std::pow(cum, 1.0 / sigma));
            }
            weak[c] = best;
        }
        KernelNormRow row;
        row.j = j;
        row.n_points = n;
        for (std::size_t c = 0; c < n; ++c) {
            row.strong = std::max(row.strong, strong[c]);
            row.weak = std::max(row.weak, weak[c]);
        }
        row.strong_ratio = row.strong / norm_const;
        row.weak_ratio = row.weak / norm_const;
        rep.rows.push_back(row);
    }
    return rep;
}

namespace {

std::vector<double> matvec_impl(const KernelMatrix& K, const std::vector<double>& a, bool parallel) {
    if (a.size() != K.size()) throw ConfigError("kernel matvec: size mismatch");
    const std::size_t n = K.size();
    std::vector<double> out(n, 0.0);
#pragma omp parallel for schedule(static) if (parallel)
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t l = 0; l < n; ++l) acc += K.entry(i, l) * a[l];
        out[i] = acc;
    }
    return out;
}

}  // namespace

std::vector<double> kernel_matvec(const KernelMatrix& K, const std::vector<double>& a) {
    return matvec_impl(K, a, true);
}
std::vector<double> kernel_matvec_serial(const KernelMatrix& K, const std::vector<double>& a) {
    return matvec_impl(K, a, false);
}

YoungReport discrete_young_apply(const KernelMatrix& K, const std::vector<double>& a, double p,
                                 double q) {
    double pinv = std::isinf(p) ? 0.0 : 1.0 / p;
    double qinv = std::isinf(q) ? 0.0 : 1.0 / q;
    double s_inv = 1.0 - (pinv - qinv);
    if (s_inv < 0.0 || s_inv > 1.0)
        throw ConfigError("discrete_young_apply: needs 1/p - 1/q = 1 - 1/s with s in [1, inf]");
    YoungReport rep;
    rep.s = s_inv == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / s_inv;
    auto out = kernel_matvec(K, a);
    rep.lhs = discrete_norm(out, q);
    rep.a_norm = discrete_norm(a, p);
    // Row and column sups coincide for the symmetric kernel.
    double B = 0.0;
    for (std::size_t c = 0; c < K.size(); ++c) {
        std::vector<double> col(K.size());
        for (std::size_t i = 0; i < K.size(); ++i) col[i] = K.entry(i, c);
        B = std::max(B, discrete_norm(col, rep.s));
    }
    rep.bound_B = B;
    rep.realized = rep.lhs / (B * rep.a_norm);
    return rep;
}

}  // namespace fractime
