#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fractime/bump.hpp"
#include "fractime/localsmooth.hpp"
#include "fractime/strichartz.hpp"

using namespace fractime;

TEST_CASE("phase certificates: the default symbol carries ratio gamma exactly") {
    for (double gamma : {1.5, 2.0, 3.0}) {
        PhaseFamily ph;
        ph.gamma = gamma;
        auto cert = phase_certificates(ph, 6);
        CHECK(cert.ok);
        CHECK(cert.ratio_min == doctest::Approx(gamma).epsilon(1e-4));
        CHECK(cert.ratio_max == doctest::Approx(gamma).epsilon(1e-4));
        CHECK(cert.ratio_min >= (gamma - 1.0) / 2.0);
        CHECK(cert.ratio_max <= 2.0 * gamma);
    }
    // A perturbed radial symbol keeps two-sided certificates.
    PhaseFamily pert;
    pert.gamma = 2.0;
    pert.Q = [](double xi, double t) { return t * (xi * xi + 0.1 * xi); };
    auto cert = phase_certificates(pert, 6);
    CHECK(cert.ok);
    CHECK(cert.ratio_min > 1.9);
    CHECK(cert.ratio_max < 2.2);
}

TEST_CASE("localization kernel: positive at coincidence, decay exponent past the near region") {
    PhaseFamily ph;
    ph.gamma = 2.0;
    auto rep = localization_kernel_check(ph, 6, 2.0);
    CHECK(rep.fitted_exponent >= 1.5);
    REQUIRE(rep.rows.size() >= 3);
    // Monotone decay across the probed octaves.
    for (std::size_t i = 1; i < rep.rows.size(); ++i)
        CHECK(rep.rows[i].sup_abs < rep.rows[i - 1].sup_abs);
}

TEST_CASE("reproducing kernel at t = s is positive at the origin") {
    // K(0) = int psi^2 with the (2 pi)^{-d} normalization.
    const int j = 5;
    double L = 16.0;
    int n = grid_size_for_band(L, j);
    GridFunction probe(1, L, n);
    std::vector<cplx> fhat(probe.total(), cplx(0, 0));
    for (std::size_t i = 0; i < probe.total(); ++i) {
        double e = lp_psi(std::exp2(-j) * probe.freq_radius(i));
        fhat[i] = e * e;
    }
    auto K = grid_from_spectrum(1, L, n, fhat);
    std::size_t origin = 0;
    for (std::size_t i = 0; i < K.total(); ++i)
        if (K.radius(i) < K.radius(origin)) origin = i;
    CHECK(K.values[origin].real() > 0.0);
    CHECK(std::abs(K.values[origin].imag()) < 1e-12 * K.values[origin].real());
}

TEST_CASE("fixed-time restriction never beats Plancherel") {
    const int j = 5;
    double L = 16.0;
    int n = grid_size_for_band(L, j);
    auto f = random_localized_band_field(1, L, n, j, 0.5, 77);
    for (double t : {0.0, 0.01, 0.3}) {
        auto u = propagate(f, 2.0, t);
        CHECK(lr_norm(u, 2.0, 1.0) <= l2_norm(f) * (1.0 + 1e-12));
    }
}

TEST_CASE("smoothing experiment: lebesgue proxy meets the classical -1/2 gain") {
    SmoothingConfig sc;
    sc.gamma = 2.0;
    sc.s = -0.5;
    sc.j_lo = 4;
    sc.j_hi = 7;
    sc.trials = 2;
    sc.seed = 5;
    auto mu = lebesgue_proxy(256);
    auto rep = smoothing_experiment(mu, sc);
    CHECK(std::abs(rep.slope) <= 0.1);
    CHECK(rep.info_value("gain_exponent") == doctest::Approx(-0.5));
}

TEST_CASE("smoothing experiment: cantor gain 2^{-j/4} is flat") {
    SmoothingConfig sc;
    sc.gamma = 2.0;
    sc.s = -0.25;
    sc.j_lo = 4;
    sc.j_hi = 7;
    sc.trials = 2;
    sc.seed = 5;
    auto mu = cantor_measure(0.5, 6);
    auto rep = smoothing_experiment(mu, sc);
    CHECK(std::abs(rep.slope) <= 0.1);
    CHECK(rep.info_value("assembled_constant") > 0.0);
    CHECK_THROWS_AS(smoothing_experiment(mu, [] {
                        SmoothingConfig bad;
                        bad.gamma = 1.0;
                        return bad;
                    }()),
                    ConfigError);
}

TEST_CASE("set-form smoothing needs the spectrum certificate and runs bounded") {
    SmoothingConfig sc;
    sc.gamma = 2.0;
    sc.s = -0.25;
    sc.j_lo = 4;
    sc.j_hi = 7;
    sc.trials = 1;
    sc.seed = 5;
    auto E = FractalSet::cantor(0.5, 8);
    CHECK_THROWS_AS(smoothing_set_experiment(E, 0.5, sc, std::nullopt), ConfigError);

    auto plan = default_plan(E);
    plan.max_centers = 16;
    auto cert = spectrum_characteristic(E, 0.5, (sc.gamma - 1.0) / sc.gamma, plan);
    auto rep = smoothing_set_experiment(E, 0.5, sc, cert);
    // Bounded against the theorem normalization; the windowed covering count
    // caps the set form below it, so the ratio may decay but never grow.
    CHECK(rep.slope <= 0.1);
    CHECK(rep.constant < 8.0);

    // Singleton set: fixed-time estimate, trivially bounded rows.
    auto single = FractalSet::explicit_points({0.5});
    auto plan2 = default_plan(single);
    auto cert2 = spectrum_characteristic(single, 0.5, (sc.gamma - 1.0) / sc.gamma, plan2);
    SmoothingConfig sc2 = sc;
    sc2.j_lo = 4;
    sc2.j_hi = 7;
    auto rep2 = smoothing_set_experiment(single, 0.5, sc2, cert2);
    for (const auto& row : rep2.rows) CHECK(row.ratio < 8.0);
}
