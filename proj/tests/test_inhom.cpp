#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fractime/bump.hpp"
#include "fractime/inhom.hpp"
#include "fractime/rng.hpp"

using namespace fractime;

namespace {

cplx grid_inner(const GridFunction& a, const GridFunction& b) {
    cplx acc(0, 0);
    for (std::size_t i = 0; i < a.total(); ++i) acc += a.values[i] * std::conj(b.values[i]);
    return acc * std::pow(a.dx(), a.d);
}

TimeSlices random_mu_slices(const AtomicMeasure& mu, double L, int n, int j, std::uint64_t seed) {
    TimeSlices F;
    F.times = mu.positions();
    F.weights = mu.weights();
    for (std::size_t s = 0; s < F.times.size(); ++s)
        F.fields.push_back(random_band_field(1, L, n, j, Rng::derive(seed, s)));
    return F;
}

}  // namespace

TEST_CASE("inhom_apply: single atom, empty retarded range, unitarity bound") {
    const double L = 16.0;
    const int n = 1 << 10, j = 4;
    auto f = random_band_field(1, L, n, j, 1);

    TimeSlices F;
    F.times = {0.25};
    F.weights = {0.7};
    F.fields = {f};

    // Single atom: out(t) = w U_{t-s0} F(s0).
    auto out = inhom_apply(F, 2.0, false, {0.9});
    auto expect = propagate(f, 2.0, 0.9 - 0.25);
    double err = 0.0;
    for (std::size_t i = 0; i < out.fields[0].total(); ++i)
        err = std::max(err, std::abs(out.fields[0].values[i] - 0.7 * expect.values[i]));
    CHECK(err < 1e-12);

    // Retarded with t below every atom: zero.
    auto zero = inhom_apply(F, 2.0, true, {0.1});
    CHECK(l2_norm(zero.fields[0]) == 0.0);

    // Retarded tie s = t carries full weight.
    auto tie = inhom_apply(F, 2.0, true, {0.25});
    CHECK(l2_norm(tie.fields[0]) == doctest::Approx(0.7 * l2_norm(f)).epsilon(1e-12));

    // Two atoms, L2-normalized slices: triangle + unitarity bound.
    TimeSlices G;
    G.times = {0.2, 0.6};
    G.weights = {0.5, 0.25};
    G.fields = {random_band_field(1, L, n, j, 2), random_band_field(1, L, n, j, 3)};
    auto o2 = inhom_apply(G, 2.0, false, {0.4});
    CHECK(l2_norm(o2.fields[0]) <= 0.75 + 1e-12);
}

TEST_CASE("duality: <inhom_apply(F), G> against mu equals the pair sum") {
    const double L = 16.0;
    const int n = 1 << 10, j = 4;
    auto mu = cantor_measure(0.5, 3);
    auto F = random_mu_slices(mu, L, n, j, 10);
    auto G = random_mu_slices(mu, L, n, j, 20);

    auto out = inhom_apply(F, 2.0, false, mu.positions());
    cplx lhs(0, 0);
    for (std::size_t t = 0; t < out.times.size(); ++t)
        lhs += mu.weights()[t] * grid_inner(out.fields[t], G.fields[t]);

    cplx rhs(0, 0);
    for (std::size_t s = 0; s < F.times.size(); ++s)
        for (std::size_t t = 0; t < G.times.size(); ++t) {
            auto prop = propagate(F.fields[s], 2.0, G.times[t] - F.times[s]);
            rhs += F.weights[s] * mu.weights()[t] * grid_inner(prop, G.fields[t]);
        }
    CHECK(std::abs(lhs - rhs) <= 1e-10 * (1.0 + std::abs(rhs)));
}

TEST_CASE("band forms: completeness against the position-space pairing") {
    const double L = 16.0;
    const double gamma = 2.0;
    const int j = 4;
    int n = grid_size_for_band(L, j, 4.0);  // room for the fattened envelope
    auto mu = cantor_measure(0.5, 4);
    auto F = random_mu_slices(mu, L, n, j, 30);
    auto G = random_mu_slices(mu, L, n, j, 40);
    auto ex = inhom_exponents(1, Rat(2), Rat(1, 2), Rat(4), Rat(4), Rat(4), Rat(4));

    int kmax = int(std::ceil(gamma * j)) + 2;
    cplx total(0, 0);
    long pairs = 0;
    for (int k = 0; k <= kmax; ++k) {
        auto res = inhom_bandform(F, G, k, j, ex);
        total += res.value;
        pairs += res.pairs;
    }
    CHECK(pairs == long(mu.size() * mu.size()));

    // Independent route: propagate the P_j / fattened-P_j pieces in position
    // space and pair on the grid.
    cplx direct(0, 0);
    for (std::size_t s = 0; s < F.times.size(); ++s) {
        auto us = propagate(lp_project(F.fields[s], j), gamma, F.times[s]);
        for (std::size_t t = 0; t < G.times.size(); ++t) {
            GridFunction gt = G.fields[t];
            {  // fattened projection
                std::vector<cplx> mult(gt.total());
                for (std::size_t i = 0; i < gt.total(); ++i)
                    mult[i] = lp_psi_tilde(std::exp2(-j) * gt.freq_radius(i));
                gt = apply_spectral_multiplier(gt, mult);
            }
            auto ut = propagate(gt, gamma, G.times[t]);
            direct += F.weights[s] * G.weights[t] * grid_inner(us, ut);
        }
    }
    CHECK(std::abs(total - direct) <= 1e-8 * (1.0 + std::abs(direct)));
}

TEST_CASE("interval splitting: only near diagonal interval pairs feed T_k") {
    const double gamma = 2.0;
    const int j = 4, k = 3;
    const double L = 16.0;
    int n = grid_size_for_band(L, j, 4.0);
    auto mu = cantor_measure(0.5, 4);
    auto F = random_mu_slices(mu, L, n, j, 50);
    auto G = random_mu_slices(mu, L, n, j, 60);
    auto ex = inhom_exponents(1, Rat(2), Rat(1, 2), Rat(4), Rat(4), Rat(4), Rat(4));
    auto whole = inhom_bandform(F, G, k, j, ex);

    // Split the time axis into length-2^{k - gamma j} cells; keep only pairs
    // of cells within distance 2^k 2^{-gamma j}.
    double cell = std::exp2(k - gamma * j);
    auto cell_of = [&](double t) { return long(std::floor(t / cell)); };
    cplx near_sum(0, 0);
    for (long cf = cell_of(0.0); cf <= cell_of(1.0); ++cf) {
        for (long cg = cf - 2; cg <= cf + 2; ++cg) {
            TimeSlices Fi, Gi;
            for (std::size_t s = 0; s < F.times.size(); ++s)
                if (cell_of(F.times[s]) == cf) {
                    Fi.times.push_back(F.times[s]);
                    Fi.weights.push_back(F.weights[s]);
                    Fi.fields.push_back(F.fields[s]);
                }
            for (std::size_t t = 0; t < G.times.size(); ++t)
                if (cell_of(G.times[t]) == cg) {
                    Gi.times.push_back(G.times[t]);
                    Gi.weights.push_back(G.weights[t]);
                    Gi.fields.push_back(G.fields[t]);
                }
            if (Fi.times.empty() || Gi.times.empty()) continue;
            near_sum += inhom_bandform(Fi, Gi, k, j, ex).value;
        }
    }
    CHECK(std::abs(near_sum - whole.value) <= 1e-9 * (1.0 + std::abs(whole.value)));
}

TEST_CASE("region preconditions are named") {
    // gamma < 2
    auto g1 = inhom_exponents(1, Rat(3, 2), Rat(1, 2), Rat(4), Rat(4), Rat(4), Rat(4));
    CHECK_THROWS_WITH_AS(check_inhom_region(g1), doctest::Contains("gamma"), ConfigError);
    // excluded boundary segment of the square hull
    auto seg = inhom_exponents(1, Rat(2), Rat(1, 2), Rat::infinity(), Rat(4), Rat(4), Rat(4));
    CHECK_THROWS_WITH_AS(check_inhom_region(seg), doctest::Contains("hull"), ConfigError);
    // excluded vertex C
    auto atC = inhom_exponents(3, Rat(2), Rat(1), Rat(4), Rat(12), Rat(2), Rat(2));
    CHECK_THROWS_WITH_AS(check_inhom_region(atC), doctest::Contains("vertex"), ConfigError);
    // q band violation
    auto qb = inhom_exponents(1, Rat(2), Rat(1, 2), Rat(4), Rat(2), Rat(8), Rat(6));
    CHECK_THROWS_WITH_AS(check_inhom_region(qb), doctest::Contains("q-band"), ConfigError);
}

TEST_CASE("empty band returns zero with the flag") {
    const double L = 16.0;
    const int j = 4;
    int n = grid_size_for_band(L, j, 4.0);
    auto mu = cantor_measure(0.5, 2);
    auto F = random_mu_slices(mu, L, n, j, 70);
    auto ex = inhom_exponents(1, Rat(2), Rat(1, 2), Rat(4), Rat(4), Rat(4), Rat(4));
    auto res = inhom_bandform(F, F, 40, j, ex);
    CHECK(res.empty);
    CHECK(res.value == cplx(0, 0));
}

TEST_CASE("sigma = 0 configuration is flat; sigma = 1/2 drifts at the exact rate") {
    auto mu = cantor_measure(0.5, cantor_depth_for_scale(0.5, std::exp2(-2.0 * 7)) + 1);
    InhomConfig ic;
    ic.j_lo = 4;
    ic.j_hi = 7;
    ic.trials = 2;
    ic.seed = 3;

    ic.exps = inhom_exponents(1, Rat(2), Rat(1, 2), Rat(4), Rat(4), Rat(4), Rat(4));
    auto flat = inhom_experiment(mu, ic);
    CHECK(std::abs(flat.slope) < 0.1);

    ic.exps = inhom_exponents(1, Rat(2), Rat(1, 2), Rat(4), Rat(4), Rat::infinity(), Rat::infinity());
    auto drift = inhom_experiment(mu, ic);
    CHECK(drift.slope == doctest::Approx(0.5).epsilon(0.2));
}
