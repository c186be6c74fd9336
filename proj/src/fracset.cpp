#include "fractime/fracset.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fractime {

void FractalSet::finalize(std::vector<Interval> ivs) {
    std::sort(ivs.begin(), ivs.end(), [](const Interval& x, const Interval& y) {
        return x.lo < y.lo || (x.lo == y.lo && x.hi < y.hi);
    });
    // Merge overlapping or touching closed intervals.
    intervals_.clear();
    for (const auto& iv : ivs) {
        if (!intervals_.empty() && iv.lo <= intervals_.back().hi)
            intervals_.back().hi = std::max(intervals_.back().hi, iv.hi);
        else
            intervals_.push_back(iv);
    }
    reps_.clear();
    reps_.reserve(intervals_.size());
    for (const auto& iv : intervals_) reps_.push_back(iv.hi);
    if (intervals_.empty()) throw ConfigError("empty fractal set");
    bounds_ = {intervals_.front().lo, intervals_.back().hi};
}

FractalSet FractalSet::cantor(double alpha, int depth) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("cantor: alpha must lie in (0,1)");
    if (depth < 0) throw ConfigError("cantor: depth must be >= 0");
    if (double(depth) / alpha > 40.0) {
        int kmax = int(std::floor(40.0 * alpha));
        throw ResolutionError("cantor: depth guard k/alpha <= 40 violated; max admissible depth is " +
                              std::to_string(kmax) + " for alpha = " + std::to_string(alpha));
    }
    std::vector<Interval> ivs{{0.0, 1.0}};
    for (int s = 1; s <= depth; ++s) {
        double len = std::exp2(-double(s) / alpha);
        std::vector<Interval> next;
        next.reserve(2 * ivs.size());
        for (const auto& iv : ivs) {
            next.push_back({iv.lo, iv.lo + len});
            next.push_back({iv.hi - len, iv.hi});
        }
        ivs.swap(next);
    }
    FractalSet E;
    E.kind_ = SetKind::Cantor;
    E.alpha_ = alpha;
    E.depth_ = depth;
    E.resolution_ = std::exp2(-double(depth) / alpha);
    E.finalize(std::move(ivs));
    return E;
}

FractalSet FractalSet::power_sequence(double a, long count) {
    if (!(a > 0.0)) throw ConfigError("power_sequence: exponent must be > 0");
    if (count < 1) throw ConfigError("power_sequence: count must be >= 1");
    std::vector<Interval> ivs;
    ivs.reserve(count);
    for (long n = count; n >= 1; --n) {
        double p = std::pow(double(n), -a);
        ivs.push_back({p, p});
    }
    FractalSet E;
    E.kind_ = SetKind::Power;
    E.a_ = a;
    E.count_ = count;
    E.cluster_gap_ = std::pow(double(count), -a) - std::pow(double(count + 1), -a);
    // Faithful down to the gap at the cluster point: coarser scales merge the
    // truncated tail into the cluster cover anyway.
    E.resolution_ = 4.0 * E.cluster_gap_;
    E.finalize(std::move(ivs));
    return E;
}

FractalSet FractalSet::power_sequence_for_resolution(double a, double target_resolution) {
    if (!(target_resolution > 0.0)) throw ConfigError("power_sequence: resolution must be > 0");
    long n = 2;
    while (std::pow(double(n), -a) - std::pow(double(n + 1), -a) >= target_resolution) {
        n *= 2;
        if (n > (1L << 26)) throw ResolutionError("power_sequence: requested resolution needs more than 2^26 points");
    }
    return power_sequence(a, n);
}

FractalSet FractalSet::explicit_points(std::vector<double> points) {
    if (points.empty()) throw ConfigError("explicit set: no points");
    std::sort(points.begin(), points.end());
    std::vector<Interval> ivs;
    ivs.reserve(points.size());
    for (double p : points) ivs.push_back({p, p});
    FractalSet E;
    E.kind_ = SetKind::Explicit;
    E.resolution_ = 0.0;
    E.finalize(std::move(ivs));
    return E;
}

FractalSet FractalSet::uniform_grid(double lo, double hi, long n) {
    if (n < 2 || !(hi > lo)) throw ConfigError("uniform_grid: need n >= 2 and hi > lo");
    std::vector<double> pts(n);
    for (long i = 0; i < n; ++i) pts[i] = lo + (hi - lo) * double(i) / double(n - 1);
    auto E = explicit_points(std::move(pts));
    E.resolution_ = 4.0 * (hi - lo) / double(n - 1);
    return E;
}

FractalSet FractalSet::affine_image(const FractalSet& base, double scale, double shift) {
    if (scale == 0.0) throw ConfigError("affine_image: scale must be nonzero");
    std::vector<Interval> ivs;
    ivs.reserve(base.intervals_.size());
    for (const auto& iv : base.intervals_) {
        double x = scale * iv.lo + shift, y = scale * iv.hi + shift;
        ivs.push_back({std::min(x, y), std::max(x, y)});
    }
    FractalSet E;
    E.kind_ = SetKind::Affine;
    E.resolution_ = std::abs(scale) * base.resolution_;
    E.finalize(std::move(ivs));
    return E;
}

FractalSet FractalSet::set_union(const std::vector<FractalSet>& parts) {
    if (parts.empty()) throw ConfigError("union: no parts");
    std::vector<Interval> ivs;
    double res = 0.0;
    for (const auto& p : parts) {
        ivs.insert(ivs.end(), p.intervals_.begin(), p.intervals_.end());
        res = std::max(res, p.resolution_);
    }
    FractalSet E;
    E.kind_ = SetKind::Union;
    E.resolution_ = res;
    E.finalize(std::move(ivs));
    return E;
}

std::string FractalSet::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case SetKind::Cantor: os << "cantor(alpha=" << alpha_ << ", depth=" << depth_ << ")"; break;
        case SetKind::Power: os << "power(a=" << a_ << ", count=" << count_ << ")"; break;
        case SetKind::Explicit: os << "explicit(" << reps_.size() << " points)"; break;
        case SetKind::Affine: os << "affine(" << intervals_.size() << " intervals)"; break;
        case SetKind::Union: os << "union(" << intervals_.size() << " intervals)"; break;
    }
    return os.str();
}

void FractalSet::check_scale(double scale, const char* op) const {
    if (scale >= resolution_ / 4.0) return;
    std::ostringstream os;
    os << op << ": scale " << scale << " is below the faithful range of this realization"
       << " (resolution " << resolution_ << ", scales down to resolution/4 are answered exactly)";
    if (kind_ == SetKind::Cantor) {
        // Smallest depth whose stage scale 2^{-k/alpha} satisfies the guard.
        int need = int(std::ceil(-alpha_ * std::log2(scale * 4.0)));
        os << "; rebuild the cantor set with depth >= " << need;
    }
    throw ResolutionError(os.str());
}

long covering_number(const FractalSet& E, Interval I, double delta) {
    if (!(delta > 0.0)) throw ConfigError("covering_number: delta must be > 0");
    E.check_scale(delta, "covering_number");
    long count = 0;
    double covered = -std::numeric_limits<double>::infinity();
    for (const auto& iv : E.intervals()) {
        if (iv.lo > I.hi) break;
        double lo = std::max(iv.lo, I.lo);
        double hi = std::min(iv.hi, I.hi);
        if (lo > hi) continue;
        // Closed covers [x, x+delta]; a piece with sup <= covered is done.
        // Anchoring each new cover at the infimum of the uncovered part is
        // optimal in one dimension.
        while (hi > covered) {
            double x = std::max(lo, covered);
            count += 1;
            covered = x + delta;
        }
    }
    return count;
}

std::vector<Interval> neighborhood(const FractalSet& E, double delta) {
    if (!(delta > 0.0)) throw ConfigError("neighborhood: delta must be > 0");
    E.check_scale(delta, "neighborhood");
    std::vector<Interval> out;
    for (const auto& iv : E.intervals()) {
        Interval fat{iv.lo - delta, iv.hi + delta};
        // Open intervals merge only on genuine overlap; touching endpoints
        // leave a point at distance exactly delta, which E(delta) excludes.
        if (!out.empty() && fat.lo < out.back().hi)
            out.back().hi = std::max(out.back().hi, fat.hi);
        else
            out.push_back(fat);
    }
    return out;
}

SeparatedSet separated_subset(const FractalSet& E, double gamma, int j) {
    if (!(gamma > 0.0)) throw ConfigError("separated_subset: gamma must be > 0");
    double spacing = std::exp2(-gamma * j);
    E.check_scale(spacing, "separated_subset");
    SeparatedSet S;
    S.spacing = spacing;
    S.j = j;
    S.gamma = gamma;
    for (double p : E.representatives()) {
        if (S.points.empty() || p - S.points.back() >= spacing) S.points.push_back(p);
    }
    return S;
}

}  // namespace fractime
