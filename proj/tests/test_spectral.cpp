#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fractime/bump.hpp"
#include "fractime/fft.hpp"
#include "fractime/rng.hpp"
#include "fractime/spectral.hpp"

using namespace fractime;

namespace {

GridFunction gaussian(double L, int n) {
    GridFunction f(1, L, n);
    for (int i = 0; i < n; ++i) {
        double x = f.coord(i);
        f.values[i] = std::exp(-x * x / 2.0);
    }
    return f;
}

double rel_l2_err(const GridFunction& a, const GridFunction& b) {
    GridFunction diff = a;
    for (std::size_t i = 0; i < diff.total(); ++i) diff.values[i] -= b.values[i];
    return l2_norm(diff) / l2_norm(b);
}

}  // namespace

TEST_CASE("fftw path matches the reference transform") {
    Rng rng(7);
    for (int n : {8, 32}) {
        std::vector<cplx> in(n);
        for (auto& v : in) v = {rng.normal(), rng.normal()};
        for (int sign : {-1, +1}) {
            auto fast = fft(in, 1, n, sign);
            auto ref = dft_reference(in, 1, n, sign);
            for (int i = 0; i < n; ++i) CHECK(std::abs(fast[i] - ref[i]) < 1e-10);
        }
    }
    std::vector<cplx> in2(16 * 16);
    for (auto& v : in2) v = {rng.normal(), rng.normal()};
    auto fast = fft(in2, 2, 16, -1);
    auto ref = dft_reference(in2, 2, 16, -1);
    for (std::size_t i = 0; i < in2.size(); ++i) CHECK(std::abs(fast[i] - ref[i]) < 1e-9);
}

TEST_CASE("spectrum round trip and Plancherel") {
    Rng rng(11);
    GridFunction f(1, 8.0, 256);
    for (auto& v : f.values) v = {rng.normal(), rng.normal()};
    auto fhat = spectrum(f);
    auto back = grid_from_spectrum(1, 8.0, 256, fhat);
    CHECK(rel_l2_err(back, f) < 1e-12);
    CHECK(sobolev_norm(f, 0.0, false) == doctest::Approx(l2_norm(f)).epsilon(1e-12));
}

TEST_CASE("propagate: identity at t = 0, unitary, group law") {
    Rng rng(13);
    GridFunction f(1, 16.0, 1024);
    for (auto& v : f.values) v = {rng.normal(), rng.normal()};
    auto same = propagate(f, 2.0, 0.0);
    CHECK(rel_l2_err(same, f) < 1e-13);

    double n0 = l2_norm(f);
    for (int trial = 0; trial < 25; ++trial) {
        double gamma = 0.3 + 2.5 * rng.next_double();
        double t = 2.0 * rng.next_double() - 1.0;
        CHECK(std::abs(l2_norm(propagate(f, gamma, t)) / n0 - 1.0) < 1e-10);
    }

    auto one = propagate(propagate(f, 1.5, 0.3), 1.5, 0.45);
    auto two = propagate(f, 1.5, 0.75);
    CHECK(rel_l2_err(one, two) < 1e-10);
}

TEST_CASE("gaussian evolution matches the closed form for gamma = 2") {
    const double L = 32.0;
    const int n = 1 << 13;
    GridFunction f = gaussian(L, n);
    for (double t : {0.1, -0.35, 0.8, 1.0}) {
        GridFunction u = propagate(f, 2.0, t);
        GridFunction exact(1, L, n);
        cplx a = 1.0 - 2.0 * cplx(0, 1) * t;
        cplx pref = std::pow(a, -0.5);
        for (int i = 0; i < n; ++i) {
            double x = exact.coord(i);
            exact.values[i] = pref * std::exp(-x * x / (2.0 * a));
        }
        CHECK(rel_l2_err(u, exact) < 1e-6);
    }
}

TEST_CASE("littlewood-paley: shell fixed point, reconstruction, disjointness") {
    const double L = 16.0;
    const int n = 1 << 12;

    // L tuned so the dyadic shell |xi| = 2^5 sits exactly on grid frequencies.
    {
        int j = 5;
        double Ls = M_PI * 163.0 / 32.0;
        GridFunction shell(1, Ls, n);
        std::vector<cplx> fhat(shell.total(), cplx(0, 0));
        for (std::size_t i = 0; i < shell.total(); ++i)
            if (std::abs(shell.freq_radius(i) - std::exp2(j)) < 1e-9) fhat[i] = 1.0;
        shell = grid_from_spectrum(1, Ls, n, fhat);
        REQUIRE(l2_norm(shell) > 0.0);
        auto proj = lp_project(shell, j);
        CHECK(rel_l2_err(proj, shell) < 1e-12);
    }

    Rng rng(17);
    GridFunction f(1, L, n);
    for (auto& v : f.values) v = {rng.normal(), rng.normal()};
    // Spectrum below 2^J: cut everything above.
    const int J = 7;
    {
        auto fhat = spectrum(f);
        for (std::size_t i = 0; i < f.total(); ++i)
            if (f.freq_radius(i) >= std::exp2(J)) fhat[i] = 0.0;
        f = grid_from_spectrum(1, L, n, fhat);
    }
    GridFunction sum = lp_low(f);
    for (int j = 1; j <= J; ++j) {
        auto pj = lp_project(f, j);
        for (std::size_t i = 0; i < sum.total(); ++i) sum.values[i] += pj.values[i];
    }
    CHECK(rel_l2_err(sum, f) < 1e-12);

    // P_j P_j' = 0 for |j - j'| >= 2.
    auto p3 = lp_project(f, 3);
    auto p3then6 = lp_project(p3, 6);
    CHECK(l2_norm(p3then6) < 1e-14 * l2_norm(f));
}

TEST_CASE("sobolev norms: band equivalence and shell quadrature oracle") {
    const double L = 16.0;
    const int n = 1 << 12;
    Rng rng(23);
    GridFunction g(1, L, n);
    for (auto& v : g.values) v = {rng.normal(), rng.normal()};
    for (int j : {3, 5, 7}) {
        auto f = lp_project(g, j);
        double l2 = l2_norm(f);
        for (double s : {-0.5, 0.5, 1.0}) {
            double ratio = sobolev_norm(f, s, false) / l2;
            // supp psi(2^-j |.|) within [2^{j-1}, 2^{j+1}]
            double lo = std::pow(1.0 + std::exp2(2.0 * (j - 1)), s / 2);
            double hi = std::pow(1.0 + std::exp2(2.0 * (j + 1)), s / 2);
            if (lo > hi) std::swap(lo, hi);
            CHECK(ratio >= lo * (1 - 1e-9));
            CHECK(ratio <= hi * (1 + 1e-9));
        }
    }

    // Indicator-like shell bump, s = 1: direct quadrature oracle.
    GridFunction shell(1, L, n);
    {
        std::vector<cplx> fhat(shell.total(), cplx(0, 0));
        for (std::size_t i = 0; i < shell.total(); ++i) {
            double r = shell.freq_radius(i);
            if (r >= 32.0 && r <= 64.0) fhat[i] = 1.0;
        }
        shell = grid_from_spectrum(1, L, n, fhat);
        double ratio = sobolev_norm(shell, 1.0, false) / l2_norm(shell);
        CHECK(ratio >= 32.0);
        CHECK(ratio <= std::sqrt(1.0 + 4096.0));
    }

    // Homogeneous norm with s < 0 needs zero mean.
    GridFunction dc(1, L, n);
    for (auto& v : dc.values) v = 1.0;
    CHECK_THROWS_AS(sobolev_norm(dc, -0.5, true), ConfigError);
}

TEST_CASE("wave packet norms follow the cap scalings") {
    const double L = 16.0;
    // ||f||_2^2 ~ 2^{dj - dm/2} * psi-mass; H^s ~ 2^{(s + d/2)j - dm/4}.
    double psi_sq_mass = 0.0;
    {
        const int quad = 1 << 16;
        for (int i = 0; i < quad; ++i) {
            double r = -4.0 + 8.0 * (i + 0.5) / quad;
            psi_sq_mass += lp_psi(std::abs(r)) * lp_psi(std::abs(r)) * (8.0 / quad);
        }
        psi_sq_mass /= 2.0 * M_PI;  // (2 pi)^{-d} quadrature oracle
    }
    for (int j : {6, 8}) {
        for (int m : {2, 4}) {
            int n = grid_size_for_band(L, j);
            auto f = wave_packet(1, L, n, j, m, {1.0, 0.0}, 0.37, 2.0);
            double l2sq = l2_norm(f) * l2_norm(f);
            double expected = std::exp2(j - m / 2.0) * psi_sq_mass;
            CHECK(l2sq == doctest::Approx(expected).epsilon(0.02));
            for (double s : {0.0, 0.5}) {
                double hs = sobolev_norm(f, s, false);
                double scaling = std::exp2((s + 0.5) * j - m / 4.0);
                CHECK(hs / scaling > 0.5 * std::sqrt(psi_sq_mass));
                CHECK(hs / scaling < 2.0 * std::sqrt(psi_sq_mass));
            }
        }
    }
}

TEST_CASE("wave packet refocuses exactly at (0, t0)") {
    const double L = 16.0;
    const int j = 7;
    int n = grid_size_for_band(L, j);
    const double t0 = 0.4375;
    auto f = wave_packet(1, L, n, j, 4.0, {1.0, 0.0}, t0, 2.0);
    auto u = propagate(f, 2.0, t0);
    std::size_t origin = 0;
    for (std::size_t i = 0; i < u.total(); ++i)
        if (u.radius(i) < u.radius(origin)) origin = i;
    CHECK(std::abs(u.values[origin]) == doctest::Approx(spectral_l1(f)).epsilon(1e-10));
}

TEST_CASE("locally constant property: factor-4 window at scale 2^{1-gamma j}") {
    const double L = 16.0;
    const int j = 6;
    const double gamma = 2.0;
    int n = grid_size_for_band(L, j);
    auto f = band_bump(1, L, n, j, 0.0);
    const double tau = 0.31;
    auto ref = propagate(f, gamma, tau);
    double ref_norm = lr_norm(ref, 4.0);
    Rng rng(31);
    std::vector<double> ts(100);
    for (auto& t : ts) t = tau + std::exp2(1.0 - gamma * j) * (2.0 * rng.next_double() - 1.0);
    auto norms = propagated_norms(f, gamma, ts, 4.0);
    for (double v : norms) {
        CHECK(v / ref_norm >= 0.25);
        CHECK(v / ref_norm <= 4.0);
    }
}

TEST_CASE("band resolution flag and grid sizing") {
    GridFunction f(1, 16.0, 256);
    f.values[0] = 1.0;  // delta spike: spectrum spread across everything
    CHECK(!band_resolved(f));
    int n = grid_size_for_band(16.0, 6, 2.5);
    auto g = band_bump(1, 16.0, n, 6, 0.0);
    CHECK(band_resolved(g));
    CHECK_THROWS_AS(lp_project(GridFunction(1, 16.0, 64), 9), ConfigError);
}

TEST_CASE("omp kernels agree with the serial references") {
    Rng rng(41);
    GridFunction f(1, 8.0, 512);
    for (auto& v : f.values) v = {rng.normal(), rng.normal()};
    for (double r : {1.0, 2.0, 4.0, std::numeric_limits<double>::infinity()}) {
        CHECK(lr_norm(f, r) == lr_norm_serial(f, r));
        CHECK(lr_norm(f, r, 3.0) == lr_norm_serial(f, r, 3.0));
    }
    std::vector<cplx> mult(f.total());
    for (std::size_t i = 0; i < mult.size(); ++i) mult[i] = std::polar(1.0, 0.1 * i);
    auto a = apply_spectral_multiplier(f, mult);
    auto b = apply_spectral_multiplier_serial(f, mult);
    for (std::size_t i = 0; i < a.total(); ++i) CHECK(a.values[i] == b.values[i]);
}

TEST_CASE("d = 2 propagation: unitarity and radial symmetry of the multiplier") {
    Rng rng(43);
    GridFunction f(2, 8.0, 64);
    for (auto& v : f.values) v = {rng.normal(), rng.normal()};
    double n0 = l2_norm(f);
    auto u = propagate(f, 1.5, 0.7);
    CHECK(std::abs(l2_norm(u) / n0 - 1.0) < 1e-10);

    // Packets along the two axes are grid transposes of each other.
    int n = grid_size_for_band(8.0, 4);
    auto px = wave_packet(2, 8.0, n, 4, 2.0, {1.0, 0.0}, 0.2, 2.0);
    auto py = wave_packet(2, 8.0, n, 4, 2.0, {0.0, 1.0}, 0.2, 2.0);
    double err = 0.0;
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            err = std::max(err, std::abs(px.values[std::size_t(i) * n + k] -
                                         py.values[std::size_t(k) * n + i]));
    CHECK(err < 1e-12);
}

TEST_CASE("grid binary container round trip") {
    Rng rng(47);
    GridFunction f(1, 4.0, 128);
    for (auto& v : f.values) v = {rng.normal(), rng.normal()};
    write_grid(f, "/tmp/fractime_grid_test.bin");
    auto g = read_grid("/tmp/fractime_grid_test.bin");
    CHECK(g.d == f.d);
    CHECK(g.L == f.L);
    CHECK(g.n == f.n);
    CHECK(g.values == f.values);
}
