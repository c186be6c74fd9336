#include "fractime/strichartz.hpp"

#include <algorithm>
#include <cmath>

#include "fractime/bump.hpp"
#include "fractime/dimension.hpp"
#include "fractime/fft.hpp"

namespace fractime {

int cantor_depth_for_scale(double alpha, double scale) {
    if (!(scale > 0.0)) throw ConfigError("cantor_depth_for_scale: scale must be > 0");
    return std::max(0, int(std::ceil(-alpha * std::log2(scale))));
}

RatioReport homogeneous_experiment(const HomogeneousConfig& hc, const FractalSet* E,
                                   const AtomicMeasure* mu) {
    const auto& ex = hc.exps;
    ex.validate();
    auto adm = admissible(ex);
    if (adm.excluded_triple) throw ConfigError("homogeneous_experiment: excluded triple (d/alpha, q, r) = (2, 2, inf)");
    const double gamma = ex.gamma.value();
    const double q = ex.q.value(), r = ex.r.value();
    const double qinv = ex.q.is_inf() ? 0.0 : 1.0 / q;

    RatioReport rep;
    rep.name = hc.form == HomForm::Measure ? "strichartz_measure" : "strichartz_set";
    rep.add_info("admissible_margin", adm.margin.value());
    rep.add_info("s", ex.s);

    double growth = 1.0;
    if (hc.form == HomForm::Measure) {
        if (!mu) throw ConfigError("homogeneous_experiment: measure form needs a measure");
        growth = growth_constant(*mu, ex.alpha.value()).value;
        rep.add_info("growth_constant", growth);
        rep.add_info("s_gamma_alpha", s_gamma_alpha(ex).value());
    } else {
        if (!E) throw ConfigError("homogeneous_experiment: set form needs a set");
        auto plan = default_plan(*E);
        plan.max_centers = 32;
        growth = assouad_characteristic(*E, ex.alpha.value(), plan).sup_value;
        rep.add_info("assouad_constant", growth);
        rep.add_info("s_gamma", s_gamma(ex).value());
    }

    for (int j = hc.j_lo; j <= hc.j_hi; ++j) {
        int n = grid_size_for_band(hc.L, j);
        if (n > hc.max_n)
            throw ConfigError("homogeneous_experiment: band j = " + std::to_string(j) +
                              " needs N = " + std::to_string(n) + " > max_n");
        // Time nodes and weights for this band. The atomic measure is the
        // measure the estimate runs against (it carries the growth bound
        // itself), so no resolution floor applies here.
        std::vector<double> times, weights;
        if (hc.form == HomForm::Measure) {
            times = mu->positions();
            weights = mu->weights();
        } else {
            double delta = std::exp2(-gamma * j);
            auto quad = interval_quadrature(neighborhood(*E, delta), delta / 2.0, hc.nodes_per_interval);
            times = std::move(quad.nodes);
            weights = std::move(quad.weights);
        }

        RatioRow row;
        row.scale = j;
        for (int trial = 0; trial < hc.trials; ++trial) {
            std::uint64_t cs = cell_seed(hc.seed, j, trial);
            GridFunction f = random_band_field(ex.d, hc.L, n, j, cs);
            auto norms = propagated_norms(f, gamma, times, r);
            double num = weighted_lq(norms, weights, q);
            double den = std::pow(growth, qinv) * sobolev_norm(f, ex.s, false);
            double ratio = num / den;
            if (ratio > row.ratio) {
                row.ratio = ratio;
                row.numerator = num;
                row.denominator = den;
                row.seed = cs;
            }
        }
        rep.rows.push_back(row);
    }
    rep.finalize();
    return rep;
}

namespace {

// Active spectral indices of the band envelope psi(2^{-j}|xi|) (or the
// fattened psi~), with weights and |xi|^gamma per index.
struct BandSupport {
    std::vector<std::size_t> idx;
    std::vector<double> env;
    std::vector<double> freq_pow;
    double quad = 0.0;  // (2 pi)^{-d} dxi^d
};

BandSupport band_support(const GridFunction& probe, int j, double gamma, bool fattened) {
    BandSupport bs;
    const double sj = std::exp2(-j);
    for (std::size_t i = 0; i < probe.total(); ++i) {
        double rad = probe.freq_radius(i);
        double e = fattened ? lp_psi_tilde(sj * rad) : lp_psi(sj * rad);
        if (e != 0.0) {
            bs.idx.push_back(i);
            bs.env.push_back(e);
            bs.freq_pow.push_back(std::pow(rad, gamma));
        }
    }
    bs.quad = std::pow(probe.dxi(), probe.d) * std::pow(2.0 * M_PI, -probe.d);
    return bs;
}

}  // namespace

BandFormResult bilinear_Bk(const std::vector<double>& taus, const std::vector<GridFunction>& F,
                           const std::vector<GridFunction>& G, int k, int j, double gamma,
                           const Rat& alpha, const Rat& a, const Rat& b, double assouad_const) {
    if (taus.size() != F.size() || taus.size() != G.size())
        throw ConfigError("bilinear_Bk: slices mismatch");
    if (F.empty()) throw ConfigError("bilinear_Bk: no slices");
    const int d = F[0].d;
    // (1/a, 1/b) must lie in the quadrangle Q; the corner pairs (2,2) and
    // (inf, inf) carry direct bounds, the rest comes by interpolation.
    Rat ya = (Rat(d) - Rat(2) * alpha) / Rat(2 * d);
    if (ya < Rat(0)) ya = Rat(0);
    auto Q = convex_hull({{Rat(0), Rat(0)}, {Rat(1, 2), ya}, {Rat(1, 2), Rat(1, 2)}, {ya, Rat(1, 2)}});
    if (!point_in_hull({a.recip(), b.recip()}, Q, false))
        throw ConfigError("bilinear_Bk: (1/a, 1/b) lies outside Q");

    BandFormResult res;
    const double scale = std::exp2(gamma * j);
    auto in_band = [&](double dist) {
        double g = scale * dist;
        if (k == 0) return g <= 1.0;
        return std::exp2(k - 1) < g && g <= std::exp2(double(k));
    };

    // Spectra restricted to the band support; the psi^2 multiplier of T and
    // the pair phase e^{i(tau - tau')|xi|^gamma} act there.
    auto bs = band_support(F[0], j, gamma, false);
    const std::size_t A = bs.idx.size();
    std::vector<std::vector<cplx>> FS(F.size()), GS(F.size());
    for (std::size_t t = 0; t < F.size(); ++t) {
        auto fh = spectrum(F[t]);
        auto gh = spectrum(G[t]);
        FS[t].resize(A);
        GS[t].resize(A);
        for (std::size_t i = 0; i < A; ++i) {
            FS[t][i] = fh[bs.idx[i]] * bs.env[i];
            GS[t][i] = gh[bs.idx[i]] * bs.env[i];
        }
    }

    cplx total(0, 0);
    for (std::size_t t = 0; t < taus.size(); ++t) {
        for (std::size_t s = 0; s < taus.size(); ++s) {
            if (!in_band(std::abs(taus[t] - taus[s]))) continue;
            res.pairs += 1;
            double dt = taus[t] - taus[s];
            cplx acc(0, 0);
            for (std::size_t i = 0; i < A; ++i)
                acc += FS[t][i] * std::conj(GS[s][i]) * std::polar(1.0, dt * bs.freq_pow[i]);
            total += acc * bs.quad;
        }
    }
    res.value = total;
    if (res.pairs == 0) {
        res.empty = true;
        return res;
    }

    double lam = lambda_ab(d, a, b).value();
    double ap = a.is_inf() ? 1.0 : a.value() / (a.value() - 1.0);
    double bp = b.is_inf() ? 1.0 : b.value() / (b.value() - 1.0);
    std::vector<double> fn(F.size()), gn(F.size());
    for (std::size_t t = 0; t < F.size(); ++t) {
        fn[t] = lr_norm(F[t], ap);
        gn[t] = lr_norm(G[t], bp);
    }
    res.bound = std::exp2(2.0 * lam * j) * std::exp2((alpha.value() - lam) * k) * assouad_const *
                discrete_norm(fn, 2.0) * discrete_norm(gn, 2.0);
    res.ratio = std::abs(res.value) / res.bound;
    return res;
}

double dual_form_norm_sq(const std::vector<double>& taus, const std::vector<GridFunction>& F,
                         int j, double gamma) {
    if (taus.size() != F.size() || F.empty()) throw ConfigError("dual_form_norm_sq: slices mismatch");
    auto bs = band_support(F[0], j, gamma, false);
    const std::size_t A = bs.idx.size();
    std::vector<cplx> acc(A, cplx(0, 0));
    for (std::size_t t = 0; t < taus.size(); ++t) {
        auto fh = spectrum(F[t]);
        // Phase sign follows the T_{tau,tau'} index order of the band forms.
        for (std::size_t i = 0; i < A; ++i)
            acc[i] += fh[bs.idx[i]] * bs.env[i] * std::polar(1.0, taus[t] * bs.freq_pow[i]);
    }
    double s = 0.0;
    for (const auto& v : acc) s += std::norm(v);
    return s * bs.quad;
}

double tt_kernel_sup(int d, double L, int n, int j, double gamma, double tau) {
    GridFunction probe(d, L, n);
    if (std::exp2(j + 1) > probe.xi_max()) throw ConfigError("tt_kernel_sup: band exceeds grid");
    std::vector<cplx> fhat(probe.total(), cplx(0, 0));
    const double sj = std::exp2(-j);
    for (std::size_t i = 0; i < probe.total(); ++i) {
        double e = lp_psi(sj * probe.freq_radius(i));
        if (e != 0.0) fhat[i] = std::polar(e * e, tau * std::pow(probe.freq_radius(i), gamma));
    }
    GridFunction K = grid_from_spectrum(d, L, n, fhat);
    return lr_norm(K, std::numeric_limits<double>::infinity());
}

}  // namespace fractime
