#include "fractime/grid.hpp"

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "fractime/fft.hpp"

namespace fractime {

GridFunction::GridFunction(int d_, double L_, int n_) : d(d_), L(L_), n(n_) {
    if (d != 1 && d != 2) throw ConfigError("grid: dimension must be 1 or 2");
    if (!(L > 0.0)) throw ConfigError("grid: half-period must be > 0");
    if (n < 2 || !is_pow2(std::size_t(n))) throw ConfigError("grid: N must be a power of two");
    values.assign(d == 1 ? std::size_t(n) : std::size_t(n) * n, cplx(0, 0));
}

double GridFunction::radius(std::size_t idx) const {
    if (d == 1) return std::abs(coord(int(idx)));
    double x = coord(int(idx / n)), y = coord(int(idx % n));
    return std::hypot(x, y);
}

double GridFunction::freq_radius(std::size_t idx) const {
    if (d == 1) return dxi() * std::abs(k_signed(int(idx)));
    double a = dxi() * k_signed(int(idx / n)), b = dxi() * k_signed(int(idx % n));
    return std::hypot(a, b);
}

double l2_norm(const GridFunction& f) { return lr_norm(f, 2.0); }

namespace {

// Fixed-size blocks keep the reduction order independent of the thread count.
constexpr std::size_t kBlock = 8192;

template <bool Windowed>
double lr_norm_impl(const GridFunction& f, double r, double window, bool parallel) {
    const std::size_t total = f.total();
    const bool inf = std::isinf(r);
    const std::size_t nblocks = (total + kBlock - 1) / kBlock;
    std::vector<double> partial(nblocks, 0.0);
#pragma omp parallel for schedule(static) if (parallel)
    for (std::size_t b = 0; b < nblocks; ++b) {
        std::size_t lo = b * kBlock, hi = std::min(total, lo + kBlock);
        double acc = 0.0;
        for (std::size_t i = lo; i < hi; ++i) {
            if constexpr (Windowed)
                if (f.radius(i) > window) continue;
            double a = std::abs(f.values[i]);
            if (inf)
                acc = std::max(acc, a);
            else if (r == 2.0)
                acc += a * a;
            else
                acc += std::pow(a, r);
        }
        partial[b] = acc;
    }
    if (inf) return *std::max_element(partial.begin(), partial.end());
    double s = 0.0;
    for (double p : partial) s += p;
    double cell = std::pow(f.dx(), f.d);
    return std::pow(s * cell, 1.0 / r);
}

}  // namespace

double lr_norm(const GridFunction& f, double r, std::optional<double> window) {
    if (!(r >= 1.0)) throw ConfigError("lr_norm: r must be >= 1");
    return window ? lr_norm_impl<true>(f, r, *window, true) : lr_norm_impl<false>(f, r, 0, true);
}

double lr_norm_serial(const GridFunction& f, double r, std::optional<double> window) {
    if (!(r >= 1.0)) throw ConfigError("lr_norm: r must be >= 1");
    return window ? lr_norm_impl<true>(f, r, *window, false) : lr_norm_impl<false>(f, r, 0, false);
}

std::vector<cplx> spectrum(const GridFunction& f) {
    auto raw = fft(f.values, f.d, f.n, -1);
    const double scale = std::pow(f.dx(), f.d);
    const std::size_t total = f.total();
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < total; ++i) {
        int par = f.d == 1 ? f.k_signed(int(i)) : f.k_signed(int(i / f.n)) + f.k_signed(int(i % f.n));
        raw[i] *= (par & 1) ? -scale : scale;
    }
    return raw;
}

GridFunction grid_from_spectrum(int d, double L, int n, const std::vector<cplx>& fhat) {
    GridFunction g(d, L, n);
    if (fhat.size() != g.total()) throw ConfigError("grid_from_spectrum: size mismatch");
    std::vector<cplx> tmp(fhat.size());
    const double scale = std::pow(g.dxi() / (2.0 * M_PI), d);
    const std::size_t total = g.total();
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < total; ++i) {
        int par = d == 1 ? g.k_signed(int(i)) : g.k_signed(int(i / n)) + g.k_signed(int(i % n));
        tmp[i] = fhat[i] * ((par & 1) ? -scale : scale);
    }
    g.values = fft(tmp, d, n, +1);
    return g;
}

namespace {

GridFunction apply_mult_impl(const GridFunction& f, const std::vector<cplx>& mult, bool parallel) {
    if (mult.size() != f.total()) throw ConfigError("spectral multiplier: size mismatch");
    auto raw = fft(f.values, f.d, f.n, -1);
    const double inv = 1.0 / double(f.total());
    const std::size_t total = f.total();
#pragma omp parallel for schedule(static) if (parallel)
    for (std::size_t i = 0; i < total; ++i) raw[i] *= mult[i] * inv;
    GridFunction out = f;
    out.values = fft(raw, f.d, f.n, +1);
    return out;
}

}  // namespace

GridFunction apply_spectral_multiplier(const GridFunction& f, const std::vector<cplx>& mult) {
    return apply_mult_impl(f, mult, true);
}

GridFunction apply_spectral_multiplier_serial(const GridFunction& f, const std::vector<cplx>& mult) {
    return apply_mult_impl(f, mult, false);
}

void write_grid(const GridFunction& f, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw ConfigError("write_grid: cannot open " + path);
    std::uint32_t d = f.d, n = f.n;
    os.write(reinterpret_cast<const char*>(&d), 4);
    os.write(reinterpret_cast<const char*>(&n), 4);
    os.write(reinterpret_cast<const char*>(&f.L), 8);
    os.write(reinterpret_cast<const char*>(f.values.data()), std::streamsize(f.total() * sizeof(cplx)));
}

GridFunction read_grid(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw ConfigError("read_grid: cannot open " + path);
    std::uint32_t d = 0, n = 0;
    double L = 0;
    is.read(reinterpret_cast<char*>(&d), 4);
    is.read(reinterpret_cast<char*>(&n), 4);
    is.read(reinterpret_cast<char*>(&L), 8);
    GridFunction f(int(d), L, int(n));
    is.read(reinterpret_cast<char*>(f.values.data()), std::streamsize(f.total() * sizeof(cplx)));
    if (!is) throw ConfigError("read_grid: truncated file " + path);
    return f;
}

}  // namespace fractime
