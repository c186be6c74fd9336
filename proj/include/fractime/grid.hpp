#ifndef FRACTIME_GRID_HPP
#define FRACTIME_GRID_HPP

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "fractime/common.hpp"

namespace fractime {

// Complex field sampled on the periodic grid [-L, L)^d, N samples per axis
// (N a power of two). Frequencies are xi_k = (pi/L) k, k in {-N/2..N/2-1}
// per axis. Values are row-major.
struct GridFunction {
    int d = 1;
    double L = 0.0;
    int n = 0;
    std::vector<cplx> values;
    std::optional<int> band_hint;  // dyadic annulus the spectrum is known to occupy

    GridFunction() = default;
    GridFunction(int d_, double L_, int n_);

    std::size_t total() const { return values.size(); }
    double dx() const { return 2.0 * L / n; }
    double dxi() const { return M_PI / L; }
    double xi_max() const { return M_PI / L * (n / 2); }

    int k_signed(int i) const { return i < n / 2 ? i : i - n; }
    double coord(int i) const { return -L + dx() * i; }

    // |x| of the grid point with flat index idx.
    double radius(std::size_t idx) const;
    // |xi| of the spectrum entry with flat index idx (natural DFT order).
    double freq_radius(std::size_t idx) const;

    bool compatible(const GridFunction& o) const { return d == o.d && L == o.L && n == o.n; }
};

// L^2 norm with grid quadrature, sqrt(sum |v|^2 dx^d).
double l2_norm(const GridFunction& f);

// L^r norm; r = infinity is the grid max. An optional window restricts the
// quadrature to |x| <= radius.
double lr_norm(const GridFunction& f, double r, std::optional<double> window = std::nullopt);
double lr_norm_serial(const GridFunction& f, double r, std::optional<double> window = std::nullopt);

// Spectrum in the continuum convention: fhat(xi_k) = dx^d sum f(x) e^{-i x.xi}.
// Stored in natural DFT order.
std::vector<cplx> spectrum(const GridFunction& f);
GridFunction grid_from_spectrum(int d, double L, int n, const std::vector<cplx>& fhat);

// Entrywise spectral multiplier (natural DFT order); exact on the discrete torus.
GridFunction apply_spectral_multiplier(const GridFunction& f, const std::vector<cplx>& mult);
GridFunction apply_spectral_multiplier_serial(const GridFunction& f, const std::vector<cplx>& mult);

// Binary container: little-endian header {d: u32, N: u32, L: f64} followed by
// N^d interleaved (re, im) doubles.
void write_grid(const GridFunction& f, const std::string& path);
GridFunction read_grid(const std::string& path);

}  // namespace fractime

#endif
