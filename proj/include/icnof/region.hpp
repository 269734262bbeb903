#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace icnof {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Rate pair in bits per channel use.
struct RatePair {
    double r1 = 0.0;
    double r2 = 0.0;

    bool operator==(const RatePair&) const = default;
};

/// Weight vector of one of the five constraint families, w1*R1 + w2*R2 <= c.
struct Direction {
    double w1;
    double w2;
};

inline constexpr Direction kFamilyDirections[5] = {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {1, 2}};

/**
 * Five upper bounds describing the polytope
 * {R >= 0 : R1 <= c_r1, R2 <= c_r2, R1+R2 <= c_sum, 2R1+R2 <= c_2r1_r2, R1+2R2 <= c_r1_2r2}.
 * Any field may be +inf (constraint absent). Fields are nonnegative, so the
 * origin always belongs to the polytope.
 */
struct BoundSet {
    double c_r1 = kInf;
    double c_r2 = kInf;
    double c_sum = kInf;
    double c_2r1_r2 = kInf;
    double c_r1_2r2 = kInf;

    double operator[](std::size_t family) const noexcept;

    /// Smallest constraint slack at p; >= 0 iff p is inside (p assumed nonnegative).
    double min_slack(RatePair p) const noexcept;
    bool contains(RatePair p, double eps = 0.0) const noexcept { return min_slack(p) >= -eps; }

    /// Largest R2 with (r1, R2) inside, or -inf if no such R2 >= 0 exists.
    double max_r2(double r1) const noexcept;
    /// Largest R1 with (R1, r2) inside, or -inf.
    double max_r1(double r2) const noexcept;

    /// Upper-right boundary vertices, ordered by increasing R1 (from R1 = 0 to the largest feasible R1).
    std::vector<RatePair> pareto_vertices() const;

    /// max of w.R over the polytope (the active bound in direction w).
    double support(Direction w) const;

    /// Same polytope with the pair labels exchanged.
    BoundSet swapped() const noexcept { return {c_r2, c_r1, c_sum, c_r1_2r2, c_2r1_r2}; }

    bool operator==(const BoundSet&) const = default;
};

/// Clamp every field at zero.
BoundSet clamped(BoundSet b) noexcept;

/// Finite union of five-bound polytopes; membership is "inside at least one".
class Region {
public:
    explicit Region(std::vector<BoundSet> bound_sets);

    std::span<const BoundSet> bound_sets() const noexcept { return bound_sets_; }
    std::size_t size() const noexcept { return bound_sets_.size(); }

    /// Region with polytopes that lie inside another single polytope removed. Same membership.
    Region without_dominated() const;

private:
    std::vector<BoundSet> bound_sets_;
};

bool contains(const Region& region, RatePair p, double eps = 0.0);

double sup_r1(const Region& region);
double sup_r2(const Region& region);

/**
 * Pareto-frontier samples of a bounded region: a sweep of `samples` points over
 * R1, the mirrored sweep over R2, and every polytope vertex, reduced to the
 * mutually non-dominated subset and sorted by increasing R1.
 */
std::vector<RatePair> frontier(const Region& region, std::size_t samples, unsigned threads = 1);

/// Minimal xi >= 0 with ((t1 - xi)^+, (t2 - xi)^+) inside the polytope.
double shift_into(const BoundSet& b, RatePair t) noexcept;

/// Minimal xi >= 0 with ((t1 - xi)^+, (t2 - xi)^+) inside the region.
double shift_into(const Region& region, RatePair t) noexcept;

struct GapResult {
    double xi = 0.0;
    RatePair witness;
};

struct GapOptions {
    std::size_t frontier_samples = 512;
    double tol = 1e-6;
    unsigned threads = 1;
};

/**
 * Uniform-shift gap between an outer and an inner region: the largest, over
 * outer frontier samples t, of the minimal shift moving t into the inner region.
 * Both regions are downward closed, so frontier samples stand in for the whole
 * outer region.
 */
GapResult gap_xi(const Region& outer, const Region& inner, const GapOptions& options = {});

/// Same as gap_xi, evaluated on caller-supplied outer samples.
GapResult gap_xi(std::span<const RatePair> outer_samples, const Region& inner, unsigned threads = 1);

}  // namespace icnof
