#include "fractime/exponents.hpp"

#include <algorithm>

#include "fractime/common.hpp"

namespace fractime {

void ExponentConfig::validate() const {
    if (d < 1) throw ConfigError("exponents: d must be >= 1");
    if (!(gamma > Rat(0))) throw ConfigError("exponents: gamma must be > 0");
    if (!(alpha > Rat(0)) || alpha > Rat(1)) throw ConfigError("exponents: alpha must lie in (0,1]");
    if (q < Rat(2) || r < Rat(2)) throw ConfigError("exponents: q, r must lie in [2, inf]");
}

Rat ExponentConfig::decay_exponent() const {
    Rat dim = branch() == Branch::Wave ? Rat(d - 1) : Rat(d);
    return dim * (Rat(1, 2) - r.recip());
}

AdmissibleResult admissible(const ExponentConfig& cfg) {
    cfg.validate();
    AdmissibleResult res;
    // (d/alpha, q, r) = (2, 2, inf) is rejected outright.
    if (Rat(cfg.d) / cfg.alpha == Rat(2) && cfg.q == Rat(2) && cfg.r.is_inf()) {
        res.excluded_triple = true;
        res.verdict = Verdict::Fail;
        res.margin = Rat(0);
        return res;
    }
    Rat half_dim = cfg.branch() == Branch::Wave ? Rat(cfg.d - 1, 2) : Rat(cfg.d, 2);
    res.margin = half_dim * (Rat(1, 2) - cfg.r.recip()) - cfg.alpha * cfg.q.recip();
    if (res.margin > Rat(0))
        res.verdict = Verdict::Strict;
    else if (res.margin == Rat(0))
        res.verdict = Verdict::Boundary;
    else
        res.verdict = Verdict::Fail;
    return res;
}

Rat s_gamma(const ExponentConfig& cfg) {
    return Rat(cfg.d, 2) - Rat(cfg.d) * cfg.r.recip() - cfg.gamma * cfg.q.recip();
}

Rat s_gamma_alpha(const ExponentConfig& cfg) {
    return Rat(cfg.d, 2) - Rat(cfg.d) * cfg.r.recip() - cfg.gamma * cfg.alpha * cfg.q.recip();
}

std::optional<Rat> r_star(int d, const Rat& alpha) {
    if (!(Rat(d) > Rat(2) * alpha)) return std::nullopt;
    return Rat(2 * d) / (Rat(d) - Rat(2) * alpha);
}

Rat lambda_ab(int d, const Rat& a, const Rat& b) {
    return Rat(d, 2) * (Rat(1) - a.recip() - b.recip());
}

namespace {

Rat cross(const RatPoint& o, const RatPoint& a, const RatPoint& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace

std::vector<RatPoint> convex_hull(std::vector<RatPoint> pts) {
    std::sort(pts.begin(), pts.end(), [](const RatPoint& a, const RatPoint& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    std::vector<RatPoint> hull;
    for (int pass = 0; pass < 2; ++pass) {
        std::size_t start = hull.size();
        for (const auto& p : pts) {
            while (hull.size() >= start + 2 &&
                   !(cross(hull[hull.size() - 2], hull.back(), p) > Rat(0)))
                hull.pop_back();
            hull.push_back(p);
        }
        hull.pop_back();
        std::reverse(pts.begin(), pts.end());
    }
    return hull;  // counterclockwise
}

bool point_in_hull(const RatPoint& p, const std::vector<RatPoint>& hull, bool strict_interior) {
    if (hull.size() < 3) {
        if (strict_interior) return false;
        if (hull.size() == 1) return p == hull[0];
        if (hull.size() == 2)
            return cross(hull[0], hull[1], p) == Rat(0) &&
                   std::min(hull[0].x, hull[1].x) <= p.x && p.x <= std::max(hull[0].x, hull[1].x) &&
                   std::min(hull[0].y, hull[1].y) <= p.y && p.y <= std::max(hull[0].y, hull[1].y);
        return false;
    }
    for (std::size_t i = 0; i < hull.size(); ++i) {
        Rat c = cross(hull[i], hull[(i + 1) % hull.size()], p);
        if (strict_interior ? !(c > Rat(0)) : c < Rat(0)) return false;
    }
    return true;
}

InhomExponents inhom_exponents(int d, const Rat& gamma, const Rat& alpha, const Rat& r_tilde,
                               const Rat& r, const Rat& q_tilde, const Rat& q) {
    for (const Rat* e : {&r_tilde, &r, &q_tilde, &q})
        if (*e < Rat(2)) throw ConfigError("inhom_exponents: exponents must lie in [2, inf]");
    InhomExponents ex;
    ex.d = d;
    ex.gamma = gamma;
    ex.alpha = alpha;
    ex.r_tilde = r_tilde;
    ex.r = r;
    ex.q_tilde = q_tilde;
    ex.q = q;

    Rat urt = r_tilde.recip(), ur = r.recip(), uqt = q_tilde.recip(), uq = q.recip();
    ex.sigma = Rat(d) * (Rat(1) - urt - ur) - gamma * alpha * (uqt + uq);
    ex.lambda = Rat(d, 2) * (Rat(1) - urt - ur) - alpha * (uqt + uq);

    Rat ya = (Rat(d) - Rat(2) * alpha) / Rat(2 * d);
    if (ya < Rat(0)) ya = Rat(0);
    ex.O = {Rat(0), Rat(0)};
    ex.A = {Rat(1, 2), ya};
    ex.A_prime = {ya, Rat(1, 2)};
    RatPoint M{Rat(1, 2), Rat(1, 2)};

    if (alpha < Rat(d) / gamma) {
        Rat xc = (Rat(d) - gamma * alpha) / (Rat(2) * (Rat(d) - alpha));
        Rat yc = (Rat(d) - Rat(2) * alpha) * (Rat(d) - gamma * alpha) /
                 (Rat(2 * d) * (Rat(d) - alpha));
        if (yc < Rat(0)) yc = Rat(0);
        ex.C = RatPoint{xc, yc};
        ex.C_prime = RatPoint{yc, xc};
    }

    RatPoint p{urt, ur};
    auto Q = convex_hull({ex.O, ex.A, M, ex.A_prime});
    ex.in_Q = point_in_hull(p, Q, false);
    ex.in_Q_interior = point_in_hull(p, Q, true);

    ex.square_hull = Rat(2) * alpha >= Rat(d);
    if (ex.square_hull) {
        // alpha >= d/2: the hull is the square (0,1/2]^2 (the two closed
        // segments through O are excluded).
        ex.in_H = p.x > Rat(0) && p.y > Rat(0) && p.x <= Rat(1, 2) && p.y <= Rat(1, 2);
        ex.at_excluded_vertex = false;
    } else if (ex.C) {
        auto H = convex_hull({M, ex.A, *ex.C, *ex.C_prime, ex.A_prime});
        ex.in_H = point_in_hull(p, H, false);
        ex.at_excluded_vertex = (p == *ex.C) || (p == *ex.C_prime);
    } else {
        // alpha < d/2 but d <= gamma alpha: the paper leaves the hull
        // unspecified (footnote of the inhomogeneous theorem).
        ex.out_of_scope = true;
    }

    // q-band for the given (r~, r).
    Rat uqt_dual = Rat(1) - uqt;  // 1/q~'
    if (ur >= urt) {
        Rat cap = Rat(1) - Rat(d) / (Rat(2) * alpha) * (ur - urt);
        ex.q_range_ok = Rat(0) <= uq && uq <= uqt_dual && uqt_dual <= cap;
    } else {
        Rat floor_ = Rat(d) / (Rat(2) * alpha) * (urt - ur);
        ex.q_range_ok = floor_ <= uq && uq <= uqt_dual && uqt_dual <= Rat(1);
    }
    return ex;
}

}  // namespace fractime
