#include "fractime/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "fractime/bump.hpp"
#include "fractime/fft.hpp"
#include "fractime/rng.hpp"

namespace fractime {

namespace {

void check_finite(const GridFunction& f, const char* op) {
    for (const auto& v : f.values)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw ConfigError(std::string(op) + ": non-finite samples");
}

std::vector<double> freq_powers(const GridFunction& f, double gamma) {
    std::vector<double> w(f.total());
    const std::size_t total = f.total();
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < total; ++i) w[i] = std::pow(f.freq_radius(i), gamma);
    return w;
}

}  // namespace

GridFunction propagate(const GridFunction& f, double gamma, double t) {
    if (!(gamma > 0.0)) throw ConfigError("propagate: gamma must be > 0");
    check_finite(f, "propagate");
    auto raw = fft(f.values, f.d, f.n, -1);
    const double inv = 1.0 / double(f.total());
    const std::size_t total = f.total();
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < total; ++i)
        raw[i] *= std::polar(inv, t * std::pow(f.freq_radius(i), gamma));
    GridFunction out = f;
    out.values = fft(raw, f.d, f.n, +1);
    return out;
}

std::vector<double> propagated_norms(const GridFunction& f, double gamma,
                                     const std::vector<double>& times, double r,
                                     std::optional<double> window) {
    if (!(gamma > 0.0)) throw ConfigError("propagate: gamma must be > 0");
    check_finite(f, "propagate");
    auto raw = fft(f.values, f.d, f.n, -1);
    auto w = freq_powers(f, gamma);
    const double inv = 1.0 / double(f.total());
    std::vector<double> norms(times.size());
#pragma omp parallel
    {
        std::vector<cplx> tmp(f.total());
        GridFunction out(f.d, f.L, f.n);
#pragma omp for schedule(dynamic)
        for (std::size_t ti = 0; ti < times.size(); ++ti) {
            const double t = times[ti];
            for (std::size_t i = 0; i < tmp.size(); ++i) tmp[i] = raw[i] * std::polar(inv, t * w[i]);
            out.values = fft(tmp, f.d, f.n, +1);
            norms[ti] = lr_norm_serial(out, r, window);
        }
    }
    return norms;
}

GridFunction lp_project(const GridFunction& f, int j) {
    double band_top = std::exp2(j + 1);
    if (band_top > f.xi_max()) throw ConfigError("lp_project: band 2^{j+1} exceeds the grid range");
    std::vector<cplx> mult(f.total());
    const double s = std::exp2(-j);
    const std::size_t total = f.total();
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < total; ++i) mult[i] = lp_psi(s * f.freq_radius(i));
    GridFunction out = apply_spectral_multiplier(f, mult);
    out.band_hint = j;
    return out;
}

GridFunction lp_low(const GridFunction& f) {
    std::vector<cplx> mult(f.total());
    const std::size_t total = f.total();
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < total; ++i) mult[i] = chi_cutoff(f.freq_radius(i));
    GridFunction out = apply_spectral_multiplier(f, mult);
    out.band_hint = 0;
    return out;
}

double sobolev_norm(const GridFunction& f, double s, bool homogeneous) {
    auto fhat = spectrum(f);
    if (homogeneous && s < 0.0) {
        double mass = 0.0;
        for (const auto& v : fhat) mass += std::abs(v);
        if (std::abs(fhat[0]) > 1e-12 * mass)
            throw ConfigError("sobolev_norm: homogeneous norm with s < 0 needs zero mean");
    }
    // cell measure (pi/L)^d with the (2 pi)^{-d} Plancherel factor
    const double quad = std::pow(f.dxi(), f.d) * std::pow(2.0 * M_PI, -f.d);
    double acc = 0.0;
    for (std::size_t i = 0; i < fhat.size(); ++i) {
        double xi2 = f.freq_radius(i);
        xi2 *= xi2;
        double a2 = std::norm(fhat[i]);
        if (homogeneous) {
            if (xi2 == 0.0) {
                if (s == 0.0) acc += a2;  // s < 0: zero-mean precondition; s > 0: |0|^{2s} = 0
                continue;
            }
            acc += std::pow(xi2, s) * a2;
        } else {
            acc += std::pow(1.0 + xi2, s) * a2;
        }
    }
    return std::sqrt(acc * quad);
}

GridFunction wave_packet(int d, double L, int n, int j, double m, std::array<double, 2> xi0,
                         double t0, double gamma) {
    if (m < 0.0) throw ConfigError("wave_packet: m must be >= 0");
    GridFunction probe(d, L, n);
    double need = std::exp2(j) * (1.0 + std::exp2(1.0 - m / 2.0));
    if (m == 0.0) need = std::exp2(j + 1);
    if (need > probe.xi_max())
        throw ResolutionError("wave_packet: grid cannot resolve the cap (needs xi_max >= " +
                              std::to_string(need) + ")");
    double norm0 = std::hypot(xi0[0], xi0[1]);
    if (d == 1) norm0 = std::abs(xi0[0]);
    if (!(norm0 > 0)) throw ConfigError("wave_packet: xi0 must be a unit direction");
    xi0[0] /= norm0;
    xi0[1] /= norm0;

    std::vector<cplx> fhat(probe.total(), cplx(0, 0));
    const double sj = std::exp2(-j), cap = std::exp2(m / 2.0);
    const std::size_t total = probe.total();
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < total; ++i) {
        double env;
        double xi_abs = probe.freq_radius(i);
        if (m == 0.0) {
            env = lp_psi(sj * xi_abs);
        } else if (d == 1) {
            double xi = probe.dxi() * probe.k_signed(int(i));
            env = lp_psi(cap * std::abs(sj * xi - xi0[0]));
        } else {
            double a = probe.dxi() * probe.k_signed(int(i / n));
            double b = probe.dxi() * probe.k_signed(int(i % n));
            env = lp_psi(cap * std::hypot(sj * a - xi0[0], sj * b - xi0[1]));
        }
        if (env != 0.0)
            fhat[i] = std::polar(env, -t0 * std::pow(xi_abs, gamma));
    }
    GridFunction out = grid_from_spectrum(d, L, n, fhat);
    out.band_hint = j;
    return out;
}

GridFunction random_band_field(int d, double L, int n, int j, std::uint64_t seed) {
    GridFunction probe(d, L, n);
    if (std::exp2(j + 1) > probe.xi_max())
        throw ConfigError("random_band_field: band exceeds the grid range");
    Rng rng(seed);
    std::vector<cplx> fhat(probe.total(), cplx(0, 0));
    const double sj = std::exp2(-j);
    for (std::size_t i = 0; i < probe.total(); ++i) {
        double env = lp_psi(sj * probe.freq_radius(i));
        if (env != 0.0) fhat[i] = env * cplx(rng.normal(), rng.normal());
    }
    GridFunction out = grid_from_spectrum(d, L, n, fhat);
    out.band_hint = j;
    double nrm = l2_norm(out);
    for (auto& v : out.values) v /= nrm;
    return out;
}

GridFunction random_localized_band_field(int d, double L, int n, int j, double width,
                                         std::uint64_t seed) {
    GridFunction g(d, L, n);
    if (std::exp2(j + 1) > g.xi_max())
        throw ConfigError("random_localized_band_field: band exceeds the grid range");
    Rng rng(seed);
    const double cut = 8.0 * width;
    for (std::size_t i = 0; i < g.total(); ++i) {
        double rr = g.radius(i);
        if (rr > cut) continue;
        double env = std::exp(-rr * rr / (2.0 * width * width));
        g.values[i] = env * cplx(rng.normal(), rng.normal());
    }
    GridFunction out = lp_project(g, j);
    double nrm = l2_norm(out);
    if (!(nrm > 0.0)) throw ConfigError("random_localized_band_field: degenerate draw");
    for (auto& v : out.values) v /= nrm;
    out.band_hint = j;
    return out;
}

GridFunction band_bump(int d, double L, int n, int j, double x0) {
    GridFunction probe(d, L, n);
    if (std::exp2(j + 1) > probe.xi_max()) throw ConfigError("band_bump: band exceeds the grid range");
    std::vector<cplx> fhat(probe.total(), cplx(0, 0));
    const double sj = std::exp2(-j);
    const std::size_t total = probe.total();
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < total; ++i) {
        double env = lp_psi(sj * probe.freq_radius(i));
        if (env == 0.0) continue;
        double phase;
        if (d == 1) {
            phase = -x0 * probe.dxi() * probe.k_signed(int(i));
        } else {
            phase = -x0 * probe.dxi() * (probe.k_signed(int(i / n)) + probe.k_signed(int(i % n)));
        }
        fhat[i] = std::polar(env, phase);
    }
    GridFunction out = grid_from_spectrum(d, L, n, fhat);
    out.band_hint = j;
    return out;
}

double spectral_l1(const GridFunction& f) {
    auto fhat = spectrum(f);
    double s = 0.0;
    for (const auto& v : fhat) s += std::abs(v);
    return s * std::pow(f.dxi(), f.d) * std::pow(2.0 * M_PI, -f.d);
}

bool band_resolved(const GridFunction& f, double tol) {
    auto fhat = spectrum(f);
    double tail = 0.0, tot = 0.0;
    double cut = f.xi_max() / 2.0;
    for (std::size_t i = 0; i < fhat.size(); ++i) {
        double a = std::norm(fhat[i]);
        tot += a;
        if (f.freq_radius(i) > cut) tail += a;
    }
    return tot == 0.0 || tail <= tol * tot;
}

int grid_size_for_band(double L, int j, double margin) {
    double need = margin * std::exp2(j + 1);
    int n = 8;
    while (M_PI / L * (n / 2) < need) {
        n *= 2;
        if (n > (1 << 26)) throw ConfigError("grid_size_for_band: band needs more than 2^26 points");
    }
    return n;
}

}  // namespace fractime
