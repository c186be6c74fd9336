#include "fractime/dimension.hpp"

#include <algorithm>
#include <cmath>

namespace fractime {

MinkowskiReport minkowski_estimate(const FractalSet& E, int m_lo, int m_hi, int m_step) {
    if (m_step < 1) throw ConfigError("minkowski_estimate: m_step must be >= 1");
    MinkowskiReport rep;
    Interval window = E.bounds();
    for (int m = m_lo; m <= m_hi; m += m_step) {
        rep.m.push_back(m);
        rep.counts.push_back(covering_number(E, window, std::exp2(-m)));
    }
    if (rep.m.size() < 3) throw ConfigError("minkowski_estimate: need at least 3 scales");
    std::vector<double> v(rep.counts.begin(), rep.counts.end());
    auto f = fit_log2(rep.m, v);
    rep.slope = f.slope;
    rep.residual = f.residual;
    return rep;
}

ScalePlan default_plan(const FractalSet& E) {
    ScalePlan plan;
    double res = E.resolution();
    int finest = res > 0.0 ? int(std::floor(std::log2(4.0 / res))) : 20;
    plan.delta_hi = std::min(finest, 40);
    plan.window_hi = std::max(0, plan.delta_hi - 2);
    return plan;
}

namespace {

std::vector<double> pick_centers(const FractalSet& E, int max_centers) {
    const auto& reps = E.representatives();
    std::vector<double> centers;
    if ((int)reps.size() <= max_centers) {
        centers = reps;
    } else {
        centers.reserve(max_centers);
        for (int i = 0; i < max_centers; ++i)
            centers.push_back(reps[(std::size_t)((double(i) + 0.5) / max_centers * reps.size())]);
    }
    return centers;
}

Interval make_window(double center, double size, bool in_unit) {
    double lo = center - size / 2.0;
    if (in_unit) lo = std::clamp(lo, 0.0, std::max(0.0, 1.0 - size));
    return {lo, lo + size};
}

// Shared sweep: for each (window exponent, delta) pair, the max ratio over
// centers; ratio = weight(window, delta) * N(E ∩ I, delta).
template <typename WeightFn, typename DeltaFn>
std::vector<ScaleRow> sweep(const FractalSet& E, const ScalePlan& plan, WeightFn&& weight,
                            DeltaFn&& delta_of_window) {
    auto centers = pick_centers(E, plan.max_centers);
    struct Cell {
        int mp;
        double delta;
    };
    std::vector<Cell> cells;
    for (int mp = plan.window_lo; mp <= plan.window_hi; ++mp) {
        double w = std::exp2(-mp);
        for (double d : delta_of_window(mp, w)) cells.push_back({mp, d});
    }
    std::vector<ScaleRow> rows(cells.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t c = 0; c < cells.size(); ++c) {
        double w = std::exp2(-cells[c].mp);
        double d = cells[c].delta;
        ScaleRow best{w, d, 0, -1.0};
        for (double center : centers) {
            Interval I = make_window(center, w, plan.windows_in_unit);
            long n = covering_number(E, I, d);
            double r = weight(w, d) * double(n);
            if (r > best.ratio) {
                best.count = n;
                best.ratio = r;
            }
        }
        rows[c] = best;
    }
    return rows;
}

ScaleRow reduce_sup(const std::vector<ScaleRow>& rows) {
    ScaleRow arg{0, 0, 0, -1.0};
    for (const auto& r : rows) {
        if (r.ratio > arg.ratio ||
            (r.ratio == arg.ratio && (r.window > arg.window || (r.window == arg.window && r.delta > arg.delta))))
            arg = r;
    }
    return arg;
}

}  // namespace

AssouadReport assouad_characteristic(const FractalSet& E, double alpha, const ScalePlan& plan) {
    AssouadReport rep;
    rep.alpha = alpha;
    rep.scale_lo = plan.window_lo;
    rep.scale_hi = plan.delta_hi;
    rep.table = sweep(
        E, plan, [alpha](double w, double d) { return std::pow(d / w, alpha); },
        [&](int mp, double) {
            std::vector<double> ds;
            for (int m = mp; m <= plan.delta_hi; ++m) ds.push_back(std::exp2(-m));
            return ds;
        });
    rep.argmax = reduce_sup(rep.table);
    rep.sup_value = rep.argmax.ratio;
    return rep;
}

SpectrumReport spectrum_characteristic(const FractalSet& E, double alpha, double theta,
                                       const ScalePlan& plan) {
    if (!(theta > 0.0 && theta < 1.0)) throw ConfigError("spectrum_characteristic: theta must lie in (0,1)");
    SpectrumReport rep;
    rep.theta = theta;
    rep.alpha = alpha;
    ScalePlan p = plan;
    p.windows_in_unit = true;
    // delta = w^{1/theta} must stay within the faithful range.
    if (E.resolution() > 0.0) {
        int finest_delta = int(std::floor(std::log2(4.0 / E.resolution())));
        p.window_hi = std::min(p.window_hi, int(std::floor(theta * finest_delta)));
    }
    rep.table = sweep(
        E, p,
        [alpha, theta](double w, double) { return std::pow(std::pow(w, 1.0 / theta - 1.0), alpha); },
        [theta](int, double w) { return std::vector<double>{std::pow(w, 1.0 / theta)}; });
    rep.argmax = reduce_sup(rep.table);
    rep.sup_value = rep.argmax.ratio;
    return rep;
}

}  // namespace fractime
