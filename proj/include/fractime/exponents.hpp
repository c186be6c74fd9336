#ifndef FRACTIME_EXPONENTS_HPP
#define FRACTIME_EXPONENTS_HPP

#include <optional>
#include <vector>

#include "fractime/rational.hpp"

namespace fractime {

enum class Branch { Schrodinger, Wave };
enum class Verdict { Strict, Boundary, Fail };

struct RatPoint {
    Rat x, y;
    bool operator==(const RatPoint& o) const { return x == o.x && y == o.y; }
};

// All exponents are kept as exact rationals in reciprocal space (1/inf = 0),
// so admissibility and hull membership never suffer boundary misclassification.
struct ExponentConfig {
    int d = 1;
    Rat gamma{2};  // = 1 selects the wave branch
    Rat alpha{1};  // in (0, 1]
    Rat q{2};
    Rat r{2};
    double s = 0.0;

    Branch branch() const { return gamma == Rat(1) ? Branch::Wave : Branch::Schrodinger; }
    // Kernel decay exponent d(1/2 - 1/r), or (d-1)(1/2 - 1/r) on the wave branch.
    Rat decay_exponent() const;
    void validate() const;
};

struct AdmissibleResult {
    Verdict verdict = Verdict::Fail;
    Rat margin;              // d/2 (1/2 - 1/r) - alpha/q
    bool excluded_triple = false;  // (d/alpha, q, r) = (2, 2, inf)
};

AdmissibleResult admissible(const ExponentConfig& cfg);

// s_gamma(q, r) = d/2 - d/r - gamma/q
Rat s_gamma(const ExponentConfig& cfg);
// s_{gamma alpha}(r, q) = d/2 - d/r - gamma alpha/q
Rat s_gamma_alpha(const ExponentConfig& cfg);

// r_* = 2d/(d - 2 alpha); only defined when d > 2 alpha.
std::optional<Rat> r_star(int d, const Rat& alpha);

// lambda(a, b) = d/2 (1 - 1/a - 1/b)
Rat lambda_ab(int d, const Rat& a, const Rat& b);

// The exponent geometry of the inhomogeneous estimate. Points live in
// reciprocal coordinates (1/r~, 1/r).
struct InhomExponents {
    int d = 1;
    Rat gamma, alpha;
    Rat r_tilde, r, q_tilde, q;

    Rat sigma;   // d(1 - 1/r~ - 1/r) - gamma(alpha/q~ + alpha/q)
    Rat lambda;  // d/2 (1 - 1/r~ - 1/r) - (alpha/q~ + alpha/q)

    RatPoint O, A, A_prime;
    std::optional<RatPoint> C, C_prime;  // need alpha < d/gamma
    bool square_hull = false;            // alpha >= d/2: H is the square (0,1/2]^2

    bool in_Q = false;           // (1/r~, 1/r) in the closed quadrangle Q
    bool in_Q_interior = false;
    bool in_H = false;           // in the hull H
    bool at_excluded_vertex = false;  // equals C or C'
    bool q_range_ok = false;     // the admissible q-band for this (r~, r)
    bool out_of_scope = false;   // C requested but d <= gamma alpha
};

InhomExponents inhom_exponents(int d, const Rat& gamma, const Rat& alpha, const Rat& r_tilde,
                               const Rat& r, const Rat& q_tilde, const Rat& q);

// Convex-polygon helpers (exact arithmetic).
std::vector<RatPoint> convex_hull(std::vector<RatPoint> pts);
bool point_in_hull(const RatPoint& p, const std::vector<RatPoint>& hull, bool strict_interior);

}  // namespace fractime

#endif
