#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "icnof/achievable.hpp"
#include "icnof/channel.hpp"
#include "icnof/region.hpp"

namespace icnof {

/// Right-hand sides of the rate-split decoding constraints, theta(l, i) for l in 1..7.
struct ThetaVector {
    std::array<std::array<double, 2>, 7> values{};

    double operator()(int l, User i) const { return values[static_cast<std::size_t>(l - 1)][i]; }
    double& operator()(int l, User i) { return values[static_cast<std::size_t>(l - 1)][i]; }

    static ThetaVector uniform(double v);
};

/// Common (two layers) and private rate parts of each message.
struct RateSplit {
    std::array<double, 2> r_c1{};
    std::array<double, 2> r_c2{};
    std::array<double, 2> r_p{};
};

ThetaVector theta_from_scheme(const ChannelParams& params, const CodingScheme& scheme);

/// The (R1, R2) projection of the split system, as five family bounds.
BoundSet fm_bounds(const ThetaVector& theta);

/// Smallest slack of the split constraints at s for the rate pair p (>= 0 iff every constraint holds).
double split_slack(const ThetaVector& theta, RatePair p, const RateSplit& s);

/**
 * Searches for a rate split of p. The first common layers run over a uniform grid
 * of `resolution` points on [0, R_i]; the second common layers are then solved
 * exactly, since they enter only through box and difference constraints.
 */
std::optional<RateSplit> find_split(const ThetaVector& theta, RatePair p, std::size_t resolution = 64);

bool split_feasible(const ThetaVector& theta, RatePair p, std::size_t resolution = 64);

struct EquivalenceViolation {
    RatePair point;
    std::string kind;  // "soundness" or "completeness"
    double slack = 0.0;
};

struct EquivalenceReport {
    std::size_t checked = 0;
    std::size_t feasible = 0;
    double margin = 0.0;
    std::vector<EquivalenceViolation> violations;

    bool passed() const { return violations.empty(); }
};

/**
 * Compares the split system with its projection on a rate_grid x rate_grid grid
 * over [0, c_r1] x [0, c_r2]: every feasible split must satisfy the projection
 * (up to `fp_tol` rounding), and every point with projection slack >= margin,
 * margin = 2 max(c_r1, c_r2) / resolution, must be feasible.
 */
EquivalenceReport equivalence_check(const ThetaVector& theta, std::size_t rate_grid = 64,
                                    std::size_t resolution = 64, double fp_tol = 1e-12);

/// Throws EquivalenceFailure with the witnesses unless the report passed.
void require_pass(const EquivalenceReport& report);

/// Random channel from the sampler ranges plus a uniform coding scheme in the parameter box.
ThetaVector random_scheme_theta(std::mt19937_64& rng);

/// Realized theta with theta2 shrunk well below theta4, so the sum-type constraints bind.
ThetaVector adversarial_theta(std::mt19937_64& rng);

struct FmCheckSummary {
    std::uint64_t seed = 0;
    std::size_t vectors = 0;
    std::size_t adversarial = 0;
    std::size_t points = 0;
    std::vector<std::pair<std::size_t, EquivalenceViolation>> violations;

    bool passed() const { return violations.empty(); }
};

/// Runs equivalence_check on `samples` realized and `adversarial` stressed theta vectors.
FmCheckSummary fm_check(std::uint64_t seed, std::size_t samples, std::size_t adversarial,
                        std::size_t resolution = 64, std::size_t rate_grid = 64, unsigned threads = 1);

}  // namespace icnof
