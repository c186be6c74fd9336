#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fractime/fracmeasure.hpp"
#include "fractime/fracset.hpp"

using namespace fractime;

TEST_CASE("cantor measure atoms at depths 0, 1, 3") {
    auto m0 = cantor_measure(0.5, 0);
    REQUIRE(m0.size() == 1);
    CHECK(m0.positions()[0] == 1.0);
    CHECK(m0.weights()[0] == 1.0);

    auto m1 = cantor_measure(0.5, 1);
    REQUIRE(m1.size() == 2);
    CHECK(m1.positions()[0] == doctest::Approx(0.25));
    CHECK(m1.positions()[1] == 1.0);
    CHECK(m1.weights()[0] == 0.5);
    CHECK(m1.weights()[1] == 0.5);

    auto m3 = cantor_measure(0.5, 3);
    REQUIRE(m3.size() == 8);
    for (double w : m3.weights()) CHECK(w == 0.125);
}

TEST_CASE("probability mass is exact at every depth") {
    for (int k : {1, 4, 7, 10}) CHECK(cantor_measure(0.5, k).total_mass() == 1.0);
}

TEST_CASE("ball mass: lebesgue proxy and totals") {
    auto mu = lebesgue_proxy(4096);
    CHECK(mu.ball_mass(0.5, 0.25) == doctest::Approx(0.5).epsilon(1e-3));
    CHECK(mu.ball_mass(0.5, 2.0) == mu.total_mass());
    CHECK_THROWS_AS(mu.ball_mass(0.5, 1e-9), ResolutionError);
}

TEST_CASE("ahlfors regularity sandwich with the exact paper constants") {
    auto mu = cantor_measure(0.5, 10);
    const double alpha = 0.5;
    for (double c : mu.positions()) {
        for (double rho = 1.0; rho >= mu.resolution(); rho /= 2.0) {
            double mass = mu.ball_mass(c, rho);
            double ra = std::pow(rho, alpha);
            CHECK(mass >= ra / 4.0);
            CHECK(mass <= 4.0 * ra);
        }
    }
}

TEST_CASE("growth constant: lebesgue proxy near 2, cantor in [1,4], off-alpha grows") {
    auto mu = lebesgue_proxy(1 << 14);
    auto rep = growth_constant(mu, 1.0);
    CHECK(rep.value == doctest::Approx(2.0).epsilon(0.1));

    auto cm = cantor_measure(0.5, 10);
    auto crep = growth_constant(cm, 0.5);
    CHECK(crep.value >= 1.0);
    CHECK(crep.value <= 4.0);

    double prev = 0.0;
    for (int k : {6, 8, 10}) {
        auto rep6 = growth_constant(cantor_measure(0.5, k), 0.6);
        CHECK(rep6.value > prev);
        prev = rep6.value;
    }
}

TEST_CASE("integrate: totals, two-atom arithmetic, scaling inequality") {
    auto m1 = cantor_measure(0.5, 1);
    CHECK(m1.integrate([](double) { return 1.0; }) == 1.0);
    CHECK(m1.integrate([](double t) { return t; }) == doctest::Approx(0.625));

    // int h dmu <= C lambda^alpha int h(lambda t) dmu with C <= 4 for ball
    // indicators on the cantor measure.
    auto mu = cantor_measure(0.5, 10);
    const double lambda = 2.0, alpha = 0.5;
    for (double center : {mu.positions()[100], mu.positions()[731]}) {
        for (double rho : {0.25, 0.0625}) {
            auto h = [&](double t) { return std::abs(t - center) < rho ? 1.0 : 0.0; };
            double lhs = mu.integrate(h);
            double rhs = std::pow(lambda, alpha) * mu.integrate([&](double t) { return h(lambda * t); });
            if (rhs > 0.0) CHECK(lhs <= 4.0 * rhs);
        }
    }
}

TEST_CASE("depth consistency on construction-aligned balls") {
    auto coarse = cantor_measure(0.5, 6);
    auto fine = cantor_measure(0.5, 10);
    auto stage = FractalSet::cantor(0.5, 4);
    for (const auto& iv : stage.intervals()) {
        double mid = 0.5 * (iv.lo + iv.hi);
        double rho = iv.length();  // covers the interval, reaches no neighbor
        CHECK(coarse.ball_mass(mid, rho) == doctest::Approx(fine.ball_mass(mid, rho)).epsilon(1e-12));
    }
}

TEST_CASE("strictly increasing positions and positive weights are enforced") {
    CHECK_THROWS_AS(AtomicMeasure({0.5, 0.5}, {1.0, 1.0}, 1.0, 0.1), ConfigError);
    CHECK_THROWS_AS(AtomicMeasure({0.5, 0.6}, {1.0, 0.0}, 1.0, 0.1), ConfigError);
}
