#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fractime/fracmeasure.hpp"
#include "fractime/mixednorm.hpp"
#include "fractime/rng.hpp"
#include "fractime/spectral.hpp"
#include "fractime/strichartz.hpp"

using namespace fractime;

namespace {

GridFunction random_field(double L, int n, std::uint64_t seed) {
    Rng rng(seed);
    GridFunction f(1, L, n);
    for (auto& v : f.values) v = {rng.normal(), rng.normal()};
    return f;
}

}  // namespace

TEST_CASE("mixed norm basics") {
    auto f = random_field(8.0, 256, 1);
    TimeSlices one{{0.0}, {f}, {1.0}};
    CHECK(mixed_norm(one, 2.0, 2.0) == doctest::Approx(l2_norm(f)).epsilon(1e-13));

    // Two slices of equal L^r norm, weights 1/2: the q = 2 average is that norm.
    TimeSlices two{{0.0, 1.0}, {f, f}, {0.5, 0.5}};
    CHECK(mixed_norm(two, 2.0, 4.0) == doctest::Approx(lr_norm(f, 4.0)).epsilon(1e-13));

    // Probability weights and a constant-in-time field: any q returns the norm.
    auto mu = cantor_measure(0.5, 6);
    TimeSlices cs;
    cs.times = mu.positions();
    cs.weights = mu.weights();
    cs.fields.assign(mu.size(), f);
    CHECK(mixed_norm(cs, 4.0, 3.0) == doctest::Approx(lr_norm(f, 3.0)).epsilon(1e-12));

    TimeSlices broken{{0.0, 1.0}, {f}, {}};
    CHECK_THROWS_AS(mixed_norm(broken, 2.0, 2.0), ConfigError);
}

TEST_CASE("mixed norm: window monotone, field homogeneous, q = inf is the max") {
    auto f = random_field(8.0, 512, 2);
    auto g = random_field(8.0, 512, 3);
    TimeSlices sl{{0.0, 0.5}, {f, g}, {0.7, 0.3}};
    CHECK(mixed_norm(sl, 2.0, 2.0, 1.0) <= mixed_norm(sl, 2.0, 2.0, 4.0));
    CHECK(mixed_norm(sl, 2.0, 2.0, 4.0) <= mixed_norm(sl, 2.0, 2.0));

    TimeSlices scaled = sl;
    for (auto& fld : scaled.fields)
        for (auto& v : fld.values) v *= 3.0;
    CHECK(mixed_norm(scaled, 2.0, 4.0) == doctest::Approx(3.0 * mixed_norm(sl, 2.0, 4.0)).epsilon(1e-12));

    double qinf = mixed_norm(sl, std::numeric_limits<double>::infinity(), 2.0);
    CHECK(qinf == doctest::Approx(std::max(l2_norm(f), l2_norm(g))).epsilon(1e-13));
}

TEST_CASE("discrete norm examples") {
    std::vector<double> ones(16, 1.0);
    CHECK(discrete_norm(ones, 2.0) == doctest::Approx(4.0));
    CHECK(discrete_norm(ones, std::numeric_limits<double>::infinity()) == 1.0);
    std::vector<double> v{3.0, 4.0};
    CHECK(discrete_norm(v, 2.0) == doctest::Approx(5.0));
    // n = 2^{alpha k} ones at q: count^{1/q}
    std::vector<double> many(1 << 6, 1.0);
    CHECK(discrete_norm(many, 4.0) == doctest::Approx(std::exp2(6.0 / 4.0)));
}

TEST_CASE("weak norm examples") {
    for (double s : {1.5, 2.0, 3.0}) {
        std::vector<double> crit;
        for (int m = 1; m <= 64; ++m) crit.push_back(std::pow(double(m), -1.0 / s));
        CHECK(weak_norm(crit, s) == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK(weak_norm({0.37}, 2.0) == doctest::Approx(0.37));
    CHECK(weak_norm({1.0, 1.0, 1.0, 1.0}, 2.0) == doctest::Approx(2.0));
    CHECK_THROWS_AS(weak_norm({1.0}, 1.0), ConfigError);

    // l^{s,inf} <= l^s pointwise on any finite list.
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> vals(1 + rng.next_u64() % 40);
        for (auto& v : vals) v = rng.next_double();
        double s = 1.1 + 3.0 * rng.next_double();
        CHECK(weak_norm(vals, s) <= discrete_norm(vals, s) * (1 + 1e-12));
    }
}

TEST_CASE("interval quadrature covers each component with enough nodes") {
    auto quad = interval_quadrature({{0.0, 0.1}, {0.5, 0.52}}, 0.01, 8);
    double mass = 0.0;
    for (double w : quad.weights) mass += w;
    CHECK(mass == doctest::Approx(0.12).epsilon(1e-12));
    CHECK(quad.nodes.size() >= 18);  // 10 + 8
}

TEST_CASE("set-form norm agrees with 2^{-gamma j/q} times the discrete norm") {
    // Lemma-equiv style equivalence: a band-j field sampled over E(2^{-gamma j})
    // against the separated-point discretization.
    const double gamma = 2.0;
    const int j = 5;
    const double L = 16.0;
    int n = grid_size_for_band(L, j);
    auto f = band_bump(1, L, n, j, 0.0);
    auto E = FractalSet::cantor(0.5, cantor_depth_for_scale(0.5, std::exp2(-gamma * j)));
    double delta = std::exp2(-gamma * j);
    auto S = separated_subset(E, gamma, j);

    const double q = 4.0, r = 4.0;
    auto quad = interval_quadrature(neighborhood(E, delta), delta / 2.0, 8);
    auto cont_norms = propagated_norms(f, gamma, quad.nodes, r);
    double cont = weighted_lq(cont_norms, quad.weights, q);

    auto disc_norms = propagated_norms(f, gamma, S.points, r);
    double disc = std::exp2(-gamma * j / q) * discrete_norm(disc_norms, q);

    double factor = cont / disc;
    CHECK(factor > 0.25);
    CHECK(factor < 4.0);
}
