#include "fractime/sharpness.hpp"

#include <algorithm>
#include <cmath>

#include "fractime/mixednorm.hpp"
#include "fractime/spectral.hpp"
#include "fractime/strichartz.hpp"

namespace fractime {

namespace {

// The step-l construction interval nearest the middle of [0,1]; the packet
// refocuses at its left endpoint and the window J covers it.
Interval middle_interval(double alpha, int level) {
    auto stage = FractalSet::cantor(alpha, level);
    const auto& ivs = stage.intervals();
    Interval best = ivs.front();
    double dist = 2.0;
    for (const auto& iv : ivs) {
        double mid = 0.5 * (iv.lo + iv.hi);
        if (std::abs(mid - 0.5) < dist) {
            dist = std::abs(mid - 0.5);
            best = iv;
        }
    }
    return best;
}

std::vector<Interval> clip_to(const std::vector<Interval>& ivs, Interval J) {
    std::vector<Interval> out;
    for (const auto& iv : ivs) {
        double lo = std::max(iv.lo, J.lo), hi = std::min(iv.hi, J.hi);
        if (lo < hi) out.push_back({lo, hi});
    }
    return out;
}

// m-slope rows of the windowed Strichartz ratio at fixed j, shared by the
// set and measure forms.
RatioReport conad_rows(const NecessityConfig& nc, bool measure_form, int gap,
                       std::vector<std::pair<std::string, double>>* extra) {
    const auto& ex = nc.exps;
    const double gamma = ex.gamma.value(), alpha = ex.alpha.value();
    const double q = ex.q.value(), r = ex.r.value();
    const int j = int(std::ceil(double(nc.m_hi + gap) / gamma));
    const double delta = std::exp2(-gamma * j);
    const int depth = cantor_depth_for_scale(alpha, delta);
    if (depth / alpha > 40.0)
        throw ResolutionError("necessity_conad: gap pushes the cantor depth past the guard");
    FractalSet E = FractalSet::cantor(alpha, depth);
    AtomicMeasure mu = cantor_measure(alpha, depth);

    const int n = grid_size_for_band(nc.L, j);
    if (n > nc.max_n) throw ConfigError("necessity_conad: grid exceeds max_n");

    RatioReport rep;
    rep.name = measure_form ? "necessity_measure" : "necessity_conad";
    // Step m so that ceil(alpha m) advances uniformly; mixed window levels
    // would zigzag the fit.
    int m_step = std::max(1, int(std::llround(1.0 / alpha)));
    for (int m = nc.m_lo; m <= nc.m_hi; m += m_step) {
        if (gamma * j < m + gap) throw ConfigError("necessity_conad: gamma j >> m violated");
        int level = depth - int(std::ceil(alpha * m));
        if (level < 0) throw ConfigError("necessity_conad: cap exceeds the construction depth");
        Interval J = middle_interval(alpha, level);
        double t0 = J.lo;
        GridFunction f = wave_packet(ex.d, nc.L, n, j, double(m), {1.0, 0.0}, t0, gamma);

        std::vector<double> times, weights;
        if (measure_form) {
            const auto& pos = mu.positions();
            const auto& w = mu.weights();
            for (std::size_t i = 0; i < pos.size(); ++i)
                if (pos[i] >= J.lo && pos[i] <= J.hi) {
                    times.push_back(pos[i]);
                    weights.push_back(w[i]);
                }
            if (extra && m == nc.m_hi) {
                double mass = 0.0;
                for (double w_ : weights) mass += w_;
                double claimed = std::exp2(alpha * m) * std::exp2(-alpha * gamma * j);
                extra->emplace_back("window_mass_ratio", mass / claimed);
            }
        } else {
            auto quad = interval_quadrature(clip_to(neighborhood(E, delta), J), delta / 2.0, 8);
            times = std::move(quad.nodes);
            weights = std::move(quad.weights);
        }
        if (times.empty()) throw ConfigError("necessity_conad: empty window");

        auto norms = propagated_norms(f, gamma, times, r);
        double num = weighted_lq(norms, weights, q);
        double den = sobolev_norm(f, ex.s, false);
        rep.rows.push_back({m, num / den, num, den, 0});
    }
    rep.finalize();
    return rep;
}

}  // namespace

NecessityReport necessity_conreg(const NecessityConfig& nc) {
    const auto& ex = nc.exps;
    const double gamma = ex.gamma.value(), alpha = ex.alpha.value();
    const double q = ex.q.value(), r = ex.r.value();
    NecessityReport rep;
    rep.name = "necessity_conreg";
    rep.predicted = s_gamma(ex).value() - ex.s;

    const int depth = std::min(int(std::floor(40.0 * alpha)),
                               cantor_depth_for_scale(alpha, std::exp2(-gamma * nc.j_hi)));
    FractalSet E = FractalSet::cantor(alpha, depth);
    // A set point near the middle; the window around it stays inside
    // E(2^{-gamma j}) for every probed band.
    const auto& reps = E.representatives();
    double t0 = reps[0];
    for (double p : reps)
        if (std::abs(p - 0.5) < std::abs(t0 - 0.5)) t0 = p;

    rep.ratios.name = rep.name;
    for (int jj = nc.j_lo; jj <= nc.j_hi; ++jj) {
        int n = grid_size_for_band(nc.L, jj);
        if (n > nc.max_n) throw ConfigError("necessity_conreg: grid exceeds max_n");
        GridFunction f = wave_packet(ex.d, nc.L, n, jj, 0.0, {1.0, 0.0}, t0, gamma);
        double halfwidth = nc.window_c * std::exp2(-gamma * jj);
        auto quad = interval_quadrature({{t0 - halfwidth, t0 + halfwidth}}, halfwidth / 8.0, 16);
        auto norms = propagated_norms(f, gamma, quad.nodes, r);
        double num = weighted_lq(norms, quad.weights, q);
        double den = sobolev_norm(f, ex.s, false);
        rep.ratios.rows.push_back({jj, num / den, num, den, 0});
    }
    rep.ratios.finalize();
    // Refocusing magnitude at (0, t0) against the spectral mass.
    {
        int n = grid_size_for_band(nc.L, nc.j_lo);
        GridFunction f = wave_packet(ex.d, nc.L, n, nc.j_lo, 0.0, {1.0, 0.0}, t0, gamma);
        GridFunction u = propagate(f, gamma, t0);
        std::size_t origin = 0;
        for (std::size_t i = 0; i < u.total(); ++i)
            if (u.radius(i) < u.radius(origin)) origin = i;
        rep.add_extra("refocus_ratio", std::abs(u.values[origin]) / spectral_l1(f));
    }
    rep.judge();
    return rep;
}

NecessityReport necessity_conad(const NecessityConfig& nc) {
    const auto& ex = nc.exps;
    NecessityReport rep;
    rep.name = "necessity_conad";
    double rinv = ex.r.is_inf() ? 0.0 : 1.0 / ex.r.value();
    double qinv = ex.q.is_inf() ? 0.0 : 1.0 / ex.q.value();
    rep.predicted = ex.d * rinv / 2.0 + ex.alpha.value() * qinv - ex.d / 4.0;
    rep.ratios = conad_rows(nc, false, nc.gap, &rep.extra);
    rep.judge();
    for (int dg : {4, 12}) {
        auto alt = conad_rows(nc, false, nc.gap - 8 + dg, nullptr);
        rep.add_extra("slope_gap_" + std::to_string(dg), alt.slope);
    }
    return rep;
}

NecessityReport necessity_measure(const NecessityConfig& nc) {
    const auto& ex = nc.exps;
    NecessityReport rep;
    rep.name = "necessity_measure";
    double rinv = ex.r.is_inf() ? 0.0 : 1.0 / ex.r.value();
    double qinv = ex.q.is_inf() ? 0.0 : 1.0 / ex.q.value();
    rep.predicted = ex.d * rinv / 2.0 + ex.alpha.value() * qinv - ex.d / 4.0;
    rep.ratios = conad_rows(nc, true, nc.gap, &rep.extra);
    rep.judge();
    return rep;
}

NecessityReport necessity_smoothing(const NecessityConfig& nc) {
    const auto& ex = nc.exps;
    const double gamma = ex.gamma.value(), alpha = ex.alpha.value();
    if (!(gamma > 1.0)) throw ConfigError("necessity_smoothing: needs gamma > 1");
    NecessityReport rep;
    rep.name = "necessity_smoothing";
    rep.predicted = alpha * (1.0 - gamma) / 2.0 - ex.s;
    rep.ratios.name = rep.name;

    // Depth fine enough that the window at the largest band holds atoms.
    double finest_window = nc.window_c * std::exp2((1.0 - gamma) * nc.j_hi);
    int depth = cantor_depth_for_scale(alpha, finest_window / 4.0);
    AtomicMeasure mu = cantor_measure(alpha, depth);
    const auto& pos = mu.positions();
    double t0 = pos[pos.size() / 2];
    for (double p : pos)
        if (std::abs(p - 0.5) < std::abs(t0 - 0.5)) t0 = p;

    // The lower growth condition at t0 over dyadic radii.
    double low_ratio = std::numeric_limits<double>::infinity();
    for (double rho = 1.0; rho >= mu.resolution(); rho /= 2.0)
        low_ratio = std::min(low_ratio, mu.ball_mass(t0, rho) / std::pow(rho, alpha));
    rep.add_extra("alpha_dim_low_ratio", low_ratio);
    if (!(low_ratio > 0.0))
        throw ConfigError("necessity_smoothing: lower growth fails at the chosen point");

    for (int jj = nc.j_lo; jj <= nc.j_hi; ++jj) {
        int n = grid_size_for_band(nc.L, jj);
        if (n > nc.max_n) throw ConfigError("necessity_smoothing: grid exceeds max_n");
        GridFunction f = wave_packet(ex.d, nc.L, n, jj, double(jj), {1.0, 0.0}, t0, gamma);
        double halfwidth = nc.window_c * std::exp2((1.0 - gamma) * jj);
        std::vector<double> times, weights;
        for (std::size_t i = 0; i < pos.size(); ++i)
            if (std::abs(pos[i] - t0) < halfwidth) {
                times.push_back(pos[i]);
                weights.push_back(mu.weights()[i]);
            }
        if (times.empty()) throw ConfigError("necessity_smoothing: empty window");
        auto norms = propagated_norms(f, gamma, times, 2.0, 1.0);
        double num = weighted_lq(norms, weights, 2.0);
        double den = sobolev_norm(f, ex.s, false);
        rep.ratios.rows.push_back({jj, num / den, num, den, 0});
    }
    rep.ratios.finalize();
    rep.judge();
    return rep;
}

TubeReport tube_lower_bound(const NecessityConfig& nc, const std::vector<int>& js,
                            const std::vector<int>& ms) {
    const auto& ex = nc.exps;
    const double gamma = ex.gamma.value();
    const double c = nc.window_c;
    TubeReport rep;
    const double t0 = 0.5;
    for (int j : js) {
        for (int m : ms) {
            if (gamma * j < m + 4) throw ConfigError("tube_lower_bound: band too low for this cap");
            // Oversample so the tube cross-section holds several grid cells.
            int n = grid_size_for_band(nc.L, j);
            double tube_halfwidth = c * std::exp2(m / 2.0 - j);
            while (2.0 * nc.L / n > tube_halfwidth / 4.0) n *= 2;
            if (n > (1 << 24)) throw ConfigError("tube_lower_bound: oversampled grid too large");
            GridFunction f = wave_packet(ex.d, nc.L, n, j, double(m), {1.0, 0.0}, t0, gamma);
            const double amp_ref = spectral_l1(f);
            double cmin = std::numeric_limits<double>::infinity();
            const double thw = c * std::exp2(double(m) - gamma * j);
            for (int ti = 0; ti < 5; ++ti) {
                double t = t0 + thw * (ti - 2) / 2.0;
                GridFunction u = propagate(f, gamma, t);
                // e^{+it|xi|^gamma} moves positive-frequency packets toward -x.
                double xc = -gamma * std::exp2((gamma - 1.0) * j) * (t - t0);
                for (int oi = -3; oi <= 3; ++oi) {
                    double x = xc + tube_halfwidth * oi / 3.0;
                    long idx = std::lround((x + u.L) / u.dx());
                    idx = std::clamp(idx, 0L, long(u.n - 1));
                    cmin = std::min(cmin, std::abs(u.values[std::size_t(idx)]) / amp_ref);
                }
            }
            rep.cells.push_back({j, m, cmin});
            rep.c_min = std::min(rep.c_min, cmin);
        }
    }
    return rep;
}

}  // namespace fractime
