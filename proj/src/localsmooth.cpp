#include "fractime/localsmooth.hpp"

#include <algorithm>
#include <cmath>

#include "fractime/bump.hpp"
#include "fractime/fft.hpp"
#include "fractime/mixednorm.hpp"

namespace fractime {

CertificateReport phase_certificates(const PhaseFamily& phase, int j, int samples) {
    CertificateReport rep;
    rep.ratio_min = std::numeric_limits<double>::infinity();
    const double lo = std::exp2(j - 1), hi = std::exp2(j + 1);
    const double pairs[][2] = {{0.0, 1.0}, {0.25, 0.75}, {0.1, 0.9}, {0.4, 0.6}};
    for (const auto& ts : pairs) {
        double t = ts[0], s = ts[1];
        for (int i = 0; i < samples; ++i) {
            double xi = lo + (hi - lo) * (i + 0.5) / samples;
            double h = xi * 1e-6;
            double diff = (phase.eval(xi + h, t) - phase.eval(xi + h, s)) -
                          (phase.eval(xi - h, t) - phase.eval(xi - h, s));
            double grad = std::abs(diff / (2.0 * h));
            double ref = std::abs(t - s) * std::pow(xi, phase.gamma - 1.0);
            double ratio = grad / ref;
            rep.ratio_min = std::min(rep.ratio_min, ratio);
            rep.ratio_max = std::max(rep.ratio_max, ratio);
        }
    }
    rep.ok = rep.ratio_min > 0.0 && std::isfinite(rep.ratio_max);
    return rep;
}

namespace {

// Wrap-free half-period for band j over the time horizon: the fastest group
// speed on the band is gamma 2^{(gamma-1)(j+1)}.
double wrapfree_L(double gamma, int j, double horizon) {
    double v = gamma * std::exp2((gamma - 1.0) * (j + 1));
    return 1.1 * v * horizon + 8.0;
}

struct BandRun {
    double max_ratio = 0.0;
    double numerator = 0.0;
    double denominator = 0.0;
    std::uint64_t seed = 0;
};

BandRun smoothing_band(const std::vector<double>& times, const std::vector<double>& weights,
                       int d, double gamma, double alpha, int j, int trials, std::uint64_t seed,
                       int max_n, double horizon) {
    double L = wrapfree_L(gamma, j, horizon);
    int n = grid_size_for_band(L, j);
    if (n > max_n)
        throw ConfigError("smoothing: band j = " + std::to_string(j) + " needs N = " +
                          std::to_string(n) + " > max_n (wrap-free domain)");
    BandRun run;
    const double gain = std::exp2(alpha * (1.0 - gamma) * j / 2.0);
    for (int trial = 0; trial < trials; ++trial) {
        std::uint64_t cs = cell_seed(seed, j, trial);
        GridFunction f = random_localized_band_field(d, L, n, j, 0.5, cs);
        auto norms = propagated_norms(f, gamma, times, 2.0, 1.0);
        double num = weighted_lq(norms, weights, 2.0);
        double den = gain;  // ||f||_2 = 1
        double ratio = num / den;
        if (ratio > run.max_ratio) {
            run.max_ratio = ratio;
            run.numerator = num;
            run.denominator = den;
            run.seed = cs;
        }
    }
    return run;
}

}  // namespace

RatioReport smoothing_experiment(const AtomicMeasure& mu, const SmoothingConfig& sc) {
    if (!(sc.gamma > 1.0)) throw ConfigError("smoothing_experiment: needs gamma > 1");
    if (mu.positions().front() < 0.0 || mu.positions().back() > sc.time_horizon)
        throw ConfigError("smoothing_experiment: supp mu must lie in [0, horizon]");
    RatioReport rep;
    rep.name = "smoothing_measure";
    const double alpha = mu.alpha();
    rep.add_info("alpha", alpha);
    rep.add_info("gain_exponent", alpha * (1.0 - sc.gamma) / 2.0);
    rep.add_info("s", sc.s);
    for (int j = sc.j_lo; j <= sc.j_hi; ++j) {
        auto run = smoothing_band(mu.positions(), mu.weights(), sc.d, sc.gamma, alpha, j,
                                  sc.trials, sc.seed, sc.max_n, sc.time_horizon);
        rep.rows.push_back({j, run.max_ratio, run.numerator, run.denominator, run.seed});
    }
    rep.finalize();
    // Littlewood-Paley assembly: the full-operator constant against H^s.
    double assembled = 0.0;
    for (const auto& row : rep.rows) {
        double gain = std::exp2(alpha * (1.0 - sc.gamma) * row.scale / 2.0);
        assembled = std::max(assembled, row.ratio * gain * std::exp2(-sc.s * row.scale));
    }
    rep.add_info("assembled_constant", assembled);
    return rep;
}

RatioReport smoothing_set_experiment(const FractalSet& E, double alpha, const SmoothingConfig& sc,
                                     const std::optional<SpectrumReport>& certificate) {
    if (!(sc.gamma > 1.0)) throw ConfigError("smoothing_set_experiment: needs gamma > 1");
    if (!certificate)
        throw ConfigError("smoothing_set_experiment: missing (alpha, (gamma-1)/gamma)-Assouad certificate");
    double theta = (sc.gamma - 1.0) / sc.gamma;
    if (std::abs(certificate->theta - theta) > 1e-9)
        throw ConfigError("smoothing_set_experiment: certificate theta mismatch");
    RatioReport rep;
    rep.name = "smoothing_set";
    rep.add_info("alpha", alpha);
    rep.add_info("certificate_sup", certificate->sup_value);
    for (int j = sc.j_lo; j <= sc.j_hi; ++j) {
        double delta = std::exp2(-sc.gamma * j);
        auto quad = interval_quadrature(neighborhood(E, delta), delta / 2.0, 8);
        auto run = smoothing_band(quad.nodes, quad.weights, sc.d, sc.gamma, alpha, j, sc.trials,
                                  sc.seed, sc.max_n, sc.time_horizon);
        rep.rows.push_back({j, run.max_ratio, run.numerator, run.denominator, run.seed});
    }
    rep.finalize();
    return rep;
}

DecayReport localization_kernel_check(const PhaseFamily& phase, int j, double L_order,
                                      int gap_octaves) {
    DecayReport rep;
    rep.j = j;
    rep.L_order = L_order;
    rep.certificates = phase_certificates(phase, j);
    const double gamma = phase.gamma;

    // K on the full x-grid via one inverse transform per time separation.
    // The half-period follows the largest swept distance gamma tau 2^{(gamma-1)(j+1)}
    // so the far field never wraps into the probed window.
    const double near_edge = 8.0 * std::exp2((1.0 - gamma) * j);  // dist(J,J') >= C 2^{(1-gamma)j}, C = 8
    double tau_max = std::min(4.0, near_edge * std::exp2(gap_octaves));
    double L = 1.2 * gamma * tau_max * std::exp2((gamma - 1.0) * (j + 1)) + 16.0;
    int n = grid_size_for_band(L, j, 1.25);
    GridFunction probe(1, L, n);
    std::vector<int> gl;
    std::vector<double> gv;
    for (int oct = 0; oct <= gap_octaves; ++oct) {
        double tau = near_edge * std::exp2(oct);
        if (tau > 4.0) break;  // supp mu in [-2,2]
        std::vector<cplx> fhat(probe.total(), cplx(0, 0));
        for (std::size_t i = 0; i < probe.total(); ++i) {
            double rad = probe.freq_radius(i);
            double e = lp_psi(std::exp2(-j) * rad);
            if (e == 0.0) continue;
            fhat[i] = std::polar(e * e, phase.eval(rad, tau) - phase.eval(rad, 0.0));
        }
        GridFunction K = grid_from_spectrum(1, L, n, fhat);
        // sup over |x - y| <= 4 (both points in a bounded window)
        double sup = lr_norm(K, std::numeric_limits<double>::infinity(), 4.0) / std::exp2(j);
        DecayRow row;
        row.gap = std::exp2(gamma * j) * tau;
        row.sup_abs = sup;
        rep.rows.push_back(row);
        if (sup > 1e-12) {  // keep the fit above the transform noise floor
            gl.push_back(int(std::round(std::log2(row.gap))));
            gv.push_back(sup);
        }
    }
    if (gl.size() < 3) throw ConfigError("localization_kernel_check: gap range too small to fit");
    rep.fitted_exponent = -fit_log2(gl, gv).slope;
    return rep;
}

}  // namespace fractime
