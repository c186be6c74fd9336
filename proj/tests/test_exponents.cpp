#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fractime/exponents.hpp"
#include "fractime/rng.hpp"

using namespace fractime;

static ExponentConfig cfg(int d, Rat gamma, Rat alpha, Rat q, Rat r) {
    ExponentConfig ex;
    ex.d = d;
    ex.gamma = gamma;
    ex.alpha = alpha;
    ex.q = q;
    ex.r = r;
    return ex;
}

TEST_CASE("rational arithmetic basics") {
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(3, 6) == Rat(1, 2));
    CHECK(Rat::infinity().recip() == Rat(0));
    CHECK(Rat(0).recip().is_inf());
    CHECK(parse_rat("7/4") == Rat(7, 4));
    CHECK(parse_rat("inf").is_inf());
    CHECK(Rat(-2, 4).str() == "-1/2");
}

TEST_CASE("admissibility verdicts with exact margins") {
    auto a = admissible(cfg(1, Rat(2), Rat(1), Rat(8), Rat(4)));
    CHECK(a.verdict == Verdict::Boundary);
    CHECK(a.margin == Rat(0));

    auto b = admissible(cfg(1, Rat(2), Rat(1, 2), Rat(4), Rat(4)));
    CHECK(b.verdict == Verdict::Boundary);

    auto c = admissible(cfg(1, Rat(2), Rat(1, 2), Rat(2), Rat(4)));
    CHECK(c.verdict == Verdict::Fail);
    CHECK(c.margin == Rat(1, 8) - Rat(1, 4));

    auto d = admissible(cfg(2, Rat(2), Rat(1), Rat(2), Rat::infinity()));
    CHECK(d.excluded_triple);
    CHECK(d.verdict == Verdict::Fail);

    // Same reciprocals but d/alpha != 2: not excluded.
    auto e = admissible(cfg(2, Rat(2), Rat(1, 2), Rat(2), Rat::infinity()));
    CHECK(!e.excluded_triple);
    CHECK(e.margin == Rat(1, 4));
    CHECK(e.verdict == Verdict::Strict);
}

TEST_CASE("wave branch admissibility uses (d-1)/2") {
    auto w = admissible(cfg(3, Rat(1), Rat(1), Rat(4), Rat(4)));
    // (3-1)/2 (1/2 - 1/4) = 1/4 vs alpha/q = 1/4: boundary
    CHECK(w.verdict == Verdict::Boundary);
}

TEST_CASE("regularity exponents") {
    CHECK(s_gamma(cfg(1, Rat(2), Rat(1), Rat(8), Rat(4))) == Rat(0));
    CHECK(s_gamma_alpha(cfg(1, Rat(2), Rat(1, 2), Rat(4), Rat(4))) == Rat(0));
    CHECK(s_gamma(cfg(3, Rat(5, 2), Rat(1), Rat::infinity(), Rat(2))) == Rat(0));
    CHECK(s_gamma(cfg(2, Rat(2), Rat(1), Rat(2), Rat(2))) == Rat(-1));
}

TEST_CASE("lambda_ab and r_star") {
    CHECK(lambda_ab(2, Rat(2), Rat(2)) == Rat(0));
    CHECK(lambda_ab(1, Rat::infinity(), Rat::infinity()) == Rat(1, 2));
    CHECK(lambda_ab(3, Rat(6), Rat(6)) == Rat(1));
    auto rs = r_star(3, Rat(1));
    REQUIRE(rs.has_value());
    CHECK(*rs == Rat(6));
    CHECK(!r_star(1, Rat(1, 2)).has_value());
    CHECK(!r_star(2, Rat(1)).has_value());
}

TEST_CASE("inhom exponent geometry at d = 3, alpha = 1, gamma = 2") {
    auto ex = inhom_exponents(3, Rat(2), Rat(1), Rat(4), Rat(4), Rat(4), Rat(4));
    CHECK(ex.A.x == Rat(1, 2));
    CHECK(ex.A.y == Rat(1, 6));
    REQUIRE(ex.C.has_value());
    CHECK(ex.C->x == Rat(1, 4));
    CHECK(ex.C->y == Rat(1, 12));
    CHECK(ex.C_prime->x == Rat(1, 12));
    CHECK(ex.C_prime->y == Rat(1, 4));
}

TEST_CASE("sigma and lambda formulas; gamma = 2 collapses lambda at sigma = 0") {
    auto ex = inhom_exponents(1, Rat(2), Rat(1, 2), Rat(4), Rat(4), Rat(4), Rat(4));
    // sigma = 1(1 - 1/4 - 1/4) - 2 * (1/8 + 1/8) = 0
    CHECK(ex.sigma == Rat(0));
    CHECK(ex.lambda == Rat(0));

    // Symmetry under the (r~, q~) <-> (r, q) swap.
    auto swapped = inhom_exponents(1, Rat(2), Rat(1, 2), Rat(4), Rat(4), Rat(4), Rat(4));
    CHECK(ex.sigma == swapped.sigma);
    auto asym = inhom_exponents(2, Rat(3), Rat(1, 2), Rat(2), Rat(6), Rat(4), Rat(8));
    auto asym2 = inhom_exponents(2, Rat(3), Rat(1, 2), Rat(6), Rat(2), Rat(8), Rat(4));
    CHECK(asym.sigma == asym2.sigma);
    CHECK(asym.lambda == asym2.lambda);

    // lambda = (gamma/2 - 1)(alpha/q~ + alpha/q) whenever sigma = 0.
    auto g3 = inhom_exponents(1, Rat(3), Rat(1, 4), Rat(4), Rat(4), Rat(8, 3), Rat(8, 3));
    if (g3.sigma == Rat(0)) {
        Rat expect = (g3.gamma / Rat(2) - Rat(1)) * (g3.alpha / g3.q_tilde + g3.alpha / g3.q);
        CHECK(g3.lambda == expect);
    }
}

TEST_CASE("hull membership: square case at alpha >= d/2 and pentagon otherwise") {
    // d = 1, alpha = 1/2: square (0,1/2]^2 without the O-adjacent segments.
    auto in = inhom_exponents(1, Rat(2), Rat(1, 2), Rat(4), Rat(4), Rat(4), Rat(4));
    CHECK(in.square_hull);
    CHECK(in.in_H);
    auto edge = inhom_exponents(1, Rat(2), Rat(1, 2), Rat::infinity(), Rat(4), Rat(4), Rat(4));
    CHECK(!edge.in_H);  // 1/r~ = 0 sits on an excluded segment

    // d = 3, alpha = 1: pentagon with C excluded.
    auto pent = inhom_exponents(3, Rat(2), Rat(1), Rat(4), Rat(4), Rat(2), Rat(2));
    CHECK(!pent.square_hull);
    CHECK(pent.in_H);
    auto atC = inhom_exponents(3, Rat(2), Rat(1), Rat(4), Rat(12), Rat(2), Rat(2));
    REQUIRE(atC.C.has_value());
    CHECK(atC.C->x == Rat(1, 4));
    CHECK(atC.at_excluded_vertex);

    // alpha in [d/gamma, d/2): C undefined, out of scope.
    auto oos = inhom_exponents(1, Rat(3), Rat(2, 5), Rat(4), Rat(4), Rat(4), Rat(4));
    CHECK(oos.out_of_scope);
}

TEST_CASE("(1/r_*, 1/r_*) lies in the interior of Q whenever d > 2 alpha") {
    Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        int d = 1 + int(rng.next_u64() % 3);
        Rat alpha(1 + std::int64_t(rng.next_u64() % 7), 8);
        if (!(Rat(d) > Rat(2) * alpha)) continue;
        auto rs = r_star(d, alpha);
        REQUIRE(rs.has_value());
        auto ex = inhom_exponents(d, Rat(2), alpha, *rs, *rs, Rat(2), Rat(2));
        CHECK(ex.in_Q_interior);
        CHECK(lambda_ab(d, *rs, *rs) == alpha);
    }
}

TEST_CASE("q-band conditions") {
    // 1/r >= 1/r~ branch: 1/q <= 1/q~' <= 1 - (d/2a)(1/r - 1/r~).
    auto ok = inhom_exponents(1, Rat(2), Rat(1, 2), Rat(4), Rat(3), Rat(6), Rat(6));
    // cap = 1 - 1*(1/3 - 1/4) = 11/12; 1/q = 1/6 <= 1/q~' = 5/6 <= 11/12
    CHECK(ok.q_range_ok);
    auto bad = inhom_exponents(1, Rat(2), Rat(1, 2), Rat(4), Rat(2), Rat(8), Rat(6));
    CHECK(!bad.q_range_ok);  // 1/q~' = 7/8 breaches the cap 3/4
}
