#include "fractime/inhom.hpp"

#include <algorithm>
#include <cmath>

#include "fractime/bump.hpp"
#include "fractime/fft.hpp"
#include "fractime/rng.hpp"

namespace fractime {

TimeSlices inhom_apply(const TimeSlices& F, double gamma, bool retarded,
                       const std::vector<double>& eval_times) {
    F.validate();
    if (F.weights.empty()) throw ConfigError("inhom_apply: F needs measure weights");
    if (!std::is_sorted(F.times.begin(), F.times.end()) ||
        !std::is_sorted(eval_times.begin(), eval_times.end()))
        throw ConfigError("inhom_apply: times must be ascending");
    const GridFunction& g0 = F.fields[0];
    const std::size_t total = g0.total();
    const double inv = 1.0 / double(total);

    std::vector<double> w(total);
    for (std::size_t i = 0; i < total; ++i) w[i] = std::pow(g0.freq_radius(i), gamma);

    // Raw spectra of the (weighted) source slices; zero slices are skipped.
    std::vector<std::vector<cplx>> raws(F.fields.size());
    std::vector<bool> nonzero(F.fields.size(), false);
    for (std::size_t s = 0; s < F.fields.size(); ++s) {
        for (const auto& v : F.fields[s].values)
            if (v != cplx(0, 0)) {
                nonzero[s] = true;
                break;
            }
        if (nonzero[s]) raws[s] = fft(F.fields[s].values, g0.d, g0.n, -1);
    }

    TimeSlices out;
    out.times = eval_times;
    out.fields.resize(eval_times.size());
    if (eval_times == F.times) out.weights = F.weights;

    const double sign_s = retarded ? +1.0 : -1.0;  // phase of e^{-+ i s |xi|^gamma}
    const double sign_t = -sign_s;
    std::vector<cplx> acc(total, cplx(0, 0));
    std::size_t sp = 0;
    bool acc_nonzero = false;

    auto fold_atom = [&](std::size_t s) {
        if (!nonzero[s]) return;
        const double ts = F.times[s];
        const double ws = F.weights[s];
        const auto& raw = raws[s];
#pragma omp parallel for schedule(static)
        for (std::size_t i = 0; i < total; ++i)
            acc[i] += raw[i] * std::polar(ws, sign_s * ts * w[i]);
        acc_nonzero = true;
    };

    if (!retarded)
        while (sp < F.times.size()) fold_atom(sp++);

    for (std::size_t ti = 0; ti < eval_times.size(); ++ti) {
        const double t = eval_times[ti];
        if (retarded)
            while (sp < F.times.size() && F.times[sp] <= t) fold_atom(sp++);
        GridFunction o(g0.d, g0.L, g0.n);
        o.band_hint = g0.band_hint;
        if (acc_nonzero) {
            std::vector<cplx> tmp(total);
#pragma omp parallel for schedule(static)
            for (std::size_t i = 0; i < total; ++i)
                tmp[i] = acc[i] * std::polar(inv, sign_t * t * w[i]);
            o.values = fft(tmp, g0.d, g0.n, +1);
        }
        out.fields[ti] = std::move(o);
    }
    return out;
}

void check_inhom_region(const InhomExponents& exps) {
    if (exps.gamma < Rat(2)) throw ConfigError("inhom: needs gamma >= 2");
    if (exps.out_of_scope)
        throw ConfigError("inhom: alpha between d/gamma and d/2 leaves the hull vertex C undefined (no claim)");
    if (!exps.in_H) throw ConfigError("inhom: (1/r~, 1/r) lies outside the hull H");
    if (exps.at_excluded_vertex) throw ConfigError("inhom: (1/r~, 1/r) sits at the excluded vertex C or C'");
    if (!exps.q_range_ok) throw ConfigError("inhom: (q~, q) violate the admissible q-band for this (r~, r)");
}

BandFormResult inhom_bandform(const TimeSlices& F, const TimeSlices& G, int k, int j,
                              const InhomExponents& exps) {
    F.validate();
    G.validate();
    if (F.weights.empty() || G.weights.empty()) throw ConfigError("inhom_bandform: measure weights required");
    if (!F.fields[0].compatible(G.fields[0])) throw ConfigError("inhom_bandform: grid mismatch");
    if (!exps.in_Q) throw ConfigError("inhom_bandform: (1/r~, 1/r) must lie in Q");

    const GridFunction& g0 = F.fields[0];
    const double gamma = exps.gamma.value();
    const double scale = std::exp2(gamma * j);
    const double sj = std::exp2(-j);

    // Support of the fattened envelope; the pair factor is psi * psi~.
    std::vector<std::size_t> idx;
    std::vector<double> env_f, env_g, freq_pow;
    for (std::size_t i = 0; i < g0.total(); ++i) {
        double rad = g0.freq_radius(i);
        double et = lp_psi_tilde(sj * rad);
        if (et == 0.0) continue;
        idx.push_back(i);
        env_f.push_back(lp_psi(sj * rad));
        env_g.push_back(et);
        freq_pow.push_back(std::pow(rad, gamma));
    }
    const double quad = std::pow(g0.dxi(), g0.d) * std::pow(2.0 * M_PI, -g0.d);
    const std::size_t A = idx.size();

    std::vector<std::vector<cplx>> FS(F.fields.size()), GS(G.fields.size());
    for (std::size_t s = 0; s < F.fields.size(); ++s) {
        auto fh = spectrum(F.fields[s]);
        FS[s].resize(A);
        for (std::size_t i = 0; i < A; ++i) FS[s][i] = fh[idx[i]] * env_f[i];
    }
    for (std::size_t t = 0; t < G.fields.size(); ++t) {
        auto gh = spectrum(G.fields[t]);
        GS[t].resize(A);
        for (std::size_t i = 0; i < A; ++i) GS[t][i] = gh[idx[i]] * env_g[i];
    }

    auto in_band = [&](double dist) {
        double g = scale * dist;
        if (k == 0) return g <= 1.0;
        return std::exp2(k - 1) < g && g <= std::exp2(double(k));
    };

    BandFormResult res;
    cplx total(0, 0);
    for (std::size_t s = 0; s < F.times.size(); ++s) {
        for (std::size_t t = 0; t < G.times.size(); ++t) {
            if (!in_band(std::abs(G.times[t] - F.times[s]))) continue;
            res.pairs += 1;
            double dt = F.times[s] - G.times[t];
            cplx acc(0, 0);
            for (std::size_t i = 0; i < A; ++i)
                acc += FS[s][i] * std::conj(GS[t][i]) * std::polar(1.0, dt * freq_pow[i]);
            total += acc * quad * F.weights[s] * G.weights[t];
        }
    }
    res.value = total;
    if (res.pairs == 0) {
        res.empty = true;
        return res;
    }

    double rtp = (Rat(1) - exps.r_tilde.recip()).recip().value();  // r~'
    double rp = (Rat(1) - exps.r.recip()).recip().value();         // r'
    double qtp = (Rat(1) - exps.q_tilde.recip()).recip().value();  // q~'
    double qp = (Rat(1) - exps.q.recip()).recip().value();         // q'
    double fn = mixed_norm(F, qtp, rtp);
    double gn = mixed_norm(G, qp, rp);
    res.bound = std::exp2(exps.sigma.value() * j) * std::exp2(-exps.lambda.value() * k) * fn * gn;
    res.ratio = std::abs(res.value) / res.bound;
    return res;
}

RatioReport inhom_experiment(const AtomicMeasure& mu, const InhomConfig& ic) {
    const auto& ex = ic.exps;
    check_inhom_region(ex);
    const double gamma = ex.gamma.value();
    const double q = ex.q.value();
    const double r = ex.r.value();
    const double qtp = (Rat(1) - ex.q_tilde.recip()).recip().value();
    const double rtp = (Rat(1) - ex.r_tilde.recip()).recip().value();

    RatioReport rep;
    rep.name = "inhom";
    rep.add_info("sigma", ex.sigma.value());
    rep.add_info("lambda", ex.lambda.value());
    rep.add_info("retarded", ic.retarded ? 1.0 : 0.0);

    for (int j = ic.j_lo; j <= ic.j_hi; ++j) {
        if (mu.resolution() > std::exp2(-gamma * j))
            throw ResolutionError("inhom_experiment: measure resolution too coarse for band j = " +
                                  std::to_string(j));
        int n = grid_size_for_band(ic.L, j);
        if (n > ic.max_n) throw ConfigError("inhom_experiment: grid exceeds max_n at band j = " + std::to_string(j));

        RatioRow row;
        row.scale = j;
        for (int trial = 0; trial < ic.trials; ++trial) {
            std::uint64_t cs = cell_seed(ic.seed, j, trial);
            TimeSlices F;
            F.times = mu.positions();
            F.weights = mu.weights();
            F.fields.resize(F.times.size());
            if (trial % 2 == 0) {
                for (std::size_t s = 0; s < F.times.size(); ++s)
                    F.fields[s] = random_band_field(ex.d, ic.L, n, j, Rng::derive(cs, s + 1));
            } else {
                // A band bump carried by the atoms of one 2^{-gamma j}-ball:
                // the diagonal interaction then reproduces the 2^{sigma j}
                // prefactor exactly.
                double t_mid = F.times[F.times.size() / 2];
                double ball = std::exp2(-gamma * j);
                GridFunction bump = band_bump(ex.d, ic.L, n, j, 0.0);
                for (std::size_t s = 0; s < F.times.size(); ++s)
                    F.fields[s] = std::abs(F.times[s] - t_mid) < ball ? bump
                                                                      : GridFunction(ex.d, ic.L, n);
            }
            auto out = inhom_apply(F, gamma, ic.retarded, mu.positions());
            out.weights = mu.weights();
            double num = mixed_norm(out, q, r);
            double den = mixed_norm(F, qtp, rtp);
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

}  // namespace fractime
