#include "icnof/region.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "icnof/errors.hpp"
#include "icnof/parallel.hpp"

namespace icnof {

namespace {

constexpr double kNegInf = -kInf;

// Points closer than this in R2 after sorting by R1 are treated as duplicates.
constexpr double kDedupTol = 1e-12;

std::vector<RatePair> pareto_filter(std::vector<RatePair> points) {
    std::sort(points.begin(), points.end(), [](const RatePair& a, const RatePair& b) {
        return a.r1 != b.r1 ? a.r1 > b.r1 : a.r2 > b.r2;
    });
    std::vector<RatePair> kept;
    double best_r2 = kNegInf;
    for (const RatePair& p : points) {
        if (p.r2 > best_r2 + kDedupTol) {
            kept.push_back(p);
            best_r2 = p.r2;
        }
    }
    std::reverse(kept.begin(), kept.end());
    return kept;
}

// Minimal xi >= 0 with w1 (t1 - xi)^+ + w2 (t2 - xi)^+ <= c.
double shift_for_constraint(Direction w, double c, RatePair t) noexcept {
    if (c == kInf) return 0.0;
    const double t1 = std::max(t.r1, 0.0);
    const double t2 = std::max(t.r2, 0.0);
    const double g0 = w.w1 * t1 + w.w2 * t2;
    if (g0 <= c) return 0.0;
    const bool first_larger = t1 >= t2;
    const double lo = first_larger ? t2 : t1;
    const double hi = first_larger ? t1 : t2;
    const double w_hi = first_larger ? w.w1 : w.w2;
    // Both coordinates shrink on [0, lo]; only the larger one on [lo, hi].
    const double g_lo = w_hi * (hi - lo);
    if (g_lo <= c) return (g0 - c) / (w.w1 + w.w2);
    return lo + (g_lo - c) / w_hi;
}

}  // namespace

double BoundSet::operator[](std::size_t family) const noexcept {
    switch (family) {
        case 0: return c_r1;
        case 1: return c_r2;
        case 2: return c_sum;
        case 3: return c_2r1_r2;
        default: return c_r1_2r2;
    }
}

double BoundSet::min_slack(RatePair p) const noexcept {
    double slack = kInf;
    for (std::size_t k = 0; k < 5; ++k) {
        const Direction w = kFamilyDirections[k];
        slack = std::min(slack, (*this)[k] - (w.w1 * p.r1 + w.w2 * p.r2));
    }
    return slack;
}

double BoundSet::max_r2(double r1) const noexcept {
    if (r1 > c_r1) return kNegInf;
    const double v = std::min({c_r2, c_sum - r1, c_2r1_r2 - 2.0 * r1, (c_r1_2r2 - r1) / 2.0});
    return v >= 0.0 ? v : kNegInf;
}

double BoundSet::max_r1(double r2) const noexcept { return swapped().max_r2(r2); }

std::vector<RatePair> BoundSet::pareto_vertices() const {
    const double r1_end = max_r1(0.0);
    if (!std::isfinite(r1_end) || !std::isfinite(max_r2(0.0)))
        throw DomainError("polytope is unbounded; frontier is undefined");

    // Breakpoints of max_r2 are where two of its four lines cross.
    const double candidates[] = {
        0.0,
        r1_end,
        c_sum - c_r2,
        (c_2r1_r2 - c_r2) / 2.0,
        c_r1_2r2 - 2.0 * c_r2,
        c_2r1_r2 - c_sum,
        2.0 * c_sum - c_r1_2r2,
        (2.0 * c_2r1_r2 - c_r1_2r2) / 3.0,
    };
    std::vector<double> xs;
    for (double x : candidates) {
        if (std::isfinite(x) && x >= 0.0 && x <= r1_end) xs.push_back(x);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    std::vector<RatePair> out;
    out.reserve(xs.size());
    for (double x : xs) {
        const double y = max_r2(x);
        if (y >= 0.0) out.push_back({x, y});
    }
    return out;
}

double BoundSet::support(Direction w) const {
    double best = 0.0;
    for (const RatePair& v : pareto_vertices()) best = std::max(best, w.w1 * v.r1 + w.w2 * v.r2);
    return best;
}

BoundSet clamped(BoundSet b) noexcept {
    b.c_r1 = std::max(b.c_r1, 0.0);
    b.c_r2 = std::max(b.c_r2, 0.0);
    b.c_sum = std::max(b.c_sum, 0.0);
    b.c_2r1_r2 = std::max(b.c_2r1_r2, 0.0);
    b.c_r1_2r2 = std::max(b.c_r1_2r2, 0.0);
    return b;
}

Region::Region(std::vector<BoundSet> bound_sets) : bound_sets_(std::move(bound_sets)) {
    if (bound_sets_.empty()) throw DomainError("a region needs at least one bound set");
    for (const BoundSet& b : bound_sets_) {
        for (std::size_t k = 0; k < 5; ++k) {
            if (std::isnan(b[k]) || b[k] < 0.0) throw DomainError("bound set fields must be >= 0");
        }
    }
}

Region Region::without_dominated() const {
    const std::size_t n = bound_sets_.size();
    // Visit larger polytopes first so dominators are already kept when tested against.
    std::vector<std::size_t> order(n);
    for (std::size_t k = 0; k < n; ++k) order[k] = k;
    auto key = [&](std::size_t k) {
        const BoundSet& b = bound_sets_[k];
        return b.c_r1 + b.c_r2 + b.c_sum + b.c_2r1_r2 + b.c_r1_2r2;
    };
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key(a) > key(b); });

    std::vector<BoundSet> kept;
    for (std::size_t k : order) {
        const BoundSet& b = bound_sets_[k];
        const bool dominated = std::any_of(kept.begin(), kept.end(), [&](const BoundSet& d) {
            return b.c_r1 <= d.c_r1 && b.c_r2 <= d.c_r2 && b.c_sum <= d.c_sum && b.c_2r1_r2 <= d.c_2r1_r2 &&
                   b.c_r1_2r2 <= d.c_r1_2r2;
        });
        if (!dominated) kept.push_back(b);
    }
    return Region(std::move(kept));
}

bool contains(const Region& region, RatePair p, double eps) {
    for (const BoundSet& b : region.bound_sets()) {
        if (b.contains(p, eps)) return true;
    }
    return false;
}

double sup_r1(const Region& region) {
    double s = 0.0;
    for (const BoundSet& b : region.bound_sets()) s = std::max(s, b.max_r1(0.0));
    return s;
}

double sup_r2(const Region& region) {
    double s = 0.0;
    for (const BoundSet& b : region.bound_sets()) s = std::max(s, b.max_r2(0.0));
    return s;
}

std::vector<RatePair> frontier(const Region& region, std::size_t samples, unsigned threads) {
    if (samples < 3) throw DomainError("frontier needs at least 3 samples per sweep");
    const double s1 = sup_r1(region);
    const double s2 = sup_r2(region);
    if (!std::isfinite(s1) || !std::isfinite(s2)) throw DomainError("region is unbounded; frontier is undefined");

    const auto sets = region.bound_sets();
    std::vector<RatePair> points(2 * samples);
    parallel_for(samples, threads, [&](std::size_t k) {
        const double frac = static_cast<double>(k) / static_cast<double>(samples - 1);
        const double r1 = s1 * frac;
        const double r2 = s2 * frac;
        double best_r2 = 0.0;
        double best_r1 = 0.0;
        for (const BoundSet& b : sets) {
            best_r2 = std::max(best_r2, b.max_r2(r1));
            best_r1 = std::max(best_r1, b.max_r1(r2));
        }
        points[k] = {r1, best_r2};
        points[samples + k] = {best_r1, r2};
    });
    for (const BoundSet& b : sets) {
        for (RatePair v : b.pareto_vertices()) {
            for (const BoundSet& other : sets) v.r2 = std::max(v.r2, other.max_r2(v.r1));
            points.push_back(v);
        }
    }
    return pareto_filter(std::move(points));
}

double shift_into(const BoundSet& b, RatePair t) noexcept {
    double xi = 0.0;
    for (std::size_t k = 0; k < 5; ++k) xi = std::max(xi, shift_for_constraint(kFamilyDirections[k], b[k], t));
    return xi;
}

double shift_into(const Region& region, RatePair t) noexcept {
    double xi = kInf;
    for (const BoundSet& b : region.bound_sets()) {
        xi = std::min(xi, shift_into(b, t));
        if (xi == 0.0) break;
    }
    return xi;
}

GapResult gap_xi(std::span<const RatePair> outer_samples, const Region& inner, unsigned threads) {
    std::vector<double> shifts(outer_samples.size(), 0.0);
    parallel_for(outer_samples.size(), threads,
                 [&](std::size_t k) { shifts[k] = shift_into(inner, outer_samples[k]); });
    GapResult result;
    for (std::size_t k = 0; k < shifts.size(); ++k) {
        if (shifts[k] > result.xi) {
            result.xi = shifts[k];
            result.witness = outer_samples[k];
        }
    }
    return result;
}

GapResult gap_xi(const Region& outer, const Region& inner, const GapOptions& options) {
    if (!(options.tol > 0.0)) throw DomainError("gap tolerance must be > 0");
    const std::vector<RatePair> samples = frontier(outer, options.frontier_samples, options.threads);
    GapResult result = gap_xi(samples, inner, options.threads);
    const RatePair shifted{std::max(result.witness.r1 - result.xi, 0.0),
                           std::max(result.witness.r2 - result.xi, 0.0)};
    if (!contains(inner, shifted, options.tol))
        throw std::logic_error("gap witness failed the inner-region membership check");
    return result;
}

}  // namespace icnof
