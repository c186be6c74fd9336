#ifndef FRACTIME_SPECTRAL_HPP
#define FRACTIME_SPECTRAL_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "fractime/grid.hpp"

namespace fractime {

// e^{it(-Delta)^{gamma/2}} f, the multiplier e^{it|xi|^gamma}; unitary and
// exact on the discrete torus.
GridFunction propagate(const GridFunction& f, double gamma, double t);

// Batch kernel: one forward transform, then per-time multiplier + inverse +
// L^r norm (optionally restricted to |x| <= window). Times run in parallel;
// each entry is computed independently of the schedule.
std::vector<double> propagated_norms(const GridFunction& f, double gamma,
                                     const std::vector<double>& times, double r,
                                     std::optional<double> window = std::nullopt);

// Littlewood-Paley pieces: P_j multiplies the spectrum by psi(2^{-j}|xi|),
// P_{<=0} by chi(|xi|), so that Id = P_{<=0} + sum_{j>=1} P_j on any grid
// resolving the bands.
GridFunction lp_project(const GridFunction& f, int j);
GridFunction lp_low(const GridFunction& f);

double sobolev_norm(const GridFunction& f, double s, bool homogeneous);

// Counterexample packet. For m > 0 the spectrum is the frequency cap
// psi(2^{m/2} |2^{-j} xi - xi0|) e^{-i t0 |xi|^gamma}; m = 0 degenerates to
// the full-shell packet psi(|xi|/2^j) e^{-i t0 |xi|^gamma}.
GridFunction wave_packet(int d, double L, int n, int j, double m, std::array<double, 2> xi0,
                         double t0, double gamma);

// Complex Gaussian coefficients shaped by psi(2^{-j}|xi|); L^2-normalized.
GridFunction random_band_field(int d, double L, int n, int j, std::uint64_t seed);

// Spatially localized variant: white noise under a Gaussian envelope of the
// given width, band-projected and L^2-normalized.
GridFunction random_localized_band_field(int d, double L, int n, int j, double width,
                                         std::uint64_t seed);

// Band-limited bump centered at x0 (spectrum psi(2^{-j}|xi|) e^{-i x0 xi}).
GridFunction band_bump(int d, double L, int n, int j, double x0);

// (2 pi)^{-d} integral of |fhat|; equals |U_{t0} f(0)| for packets with
// spectrum of constant phase at t0.
double spectral_l1(const GridFunction& f);

// True when the spectral mass beyond xi_max/2 stays below tol * total.
bool band_resolved(const GridFunction& f, double tol = 1e-10);

// Smallest power-of-two N with xi_max = (pi/L) N/2 >= margin * 2^{j+1}.
int grid_size_for_band(double L, int j, double margin = 1.25);

}  // namespace fractime

#endif
