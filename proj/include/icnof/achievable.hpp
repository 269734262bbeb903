#pragma once

#include <array>
#include <cstddef>

#include "icnof/channel.hpp"
#include "icnof/region.hpp"

namespace icnof {

/// Coding-scheme parameters: common-message correlation and the two splitting fractions.
struct CodingScheme {
    double rho = 0.0;
    double mu1 = 0.0;
    double mu2 = 0.0;

    double mu(User i) const noexcept { return i == 0 ? mu1 : mu2; }
    CodingScheme swapped() const noexcept { return {rho, mu2, mu1}; }
    bool operator==(const CodingScheme&) const = default;
};

/// Largest admissible correlation, (1 - max(1/INR12, 1/INR21))^+.
double rho_max(const ChannelParams& params) noexcept;

/// Throws DomainError unless 0 <= rho <= rho_max and 0 <= mu_i <= 1.
void validate(const CodingScheme& scheme, const ChannelParams& params);

/// Grid resolutions and worker count shared by the union constructions and gap queries.
struct GridSpec {
    std::size_t rho_steps = 33;
    std::size_t mu_steps = 17;
    std::size_t conv_rho_steps = 257;
    std::size_t frontier_samples = 512;
    double tol = 1e-6;
    unsigned threads = 1;
};

struct AuxTerms {
    std::array<double, 2> b1;     // b1_i(rho)
    std::array<double, 2> b2;     // b2_i(rho)
    std::array<double, 2> b1_at1; // b1_i(1)
};

AuxTerms aux_terms(const ChannelParams& params, double rho);

/**
 * The seven a-families per pair, in bits per channel use. Index [i] is pair i;
 * a3/a4/a5 use mu_j, a6 uses mu_i and a7 uses both. Negative values are clamped to 0.
 */
struct AchievableTerms {
    std::array<double, 2> a1;
    std::array<double, 2> a2;
    std::array<double, 2> a3;
    std::array<double, 2> a4;
    std::array<double, 2> a5;
    std::array<double, 2> a6;
    std::array<double, 2> a7;
};

AchievableTerms a_terms(const ChannelParams& params, const CodingScheme& scheme);

/// Five-bound polytope of the achievable region for one coding scheme.
BoundSet theorem1_bounds(const ChannelParams& params, const CodingScheme& scheme);

/// Same polytope built from already evaluated a-terms.
BoundSet theorem1_bounds(const AchievableTerms& a);

/// Uniform grid of `steps` points on [0, hi]; a single step yields {0}.
double grid_point(double hi, std::size_t steps, std::size_t k) noexcept;

/// Union of theorem1_bounds over the (rho, mu1, mu2) grid, one BoundSet per grid point.
Region achievable_union(const ChannelParams& params, const GridSpec& grid = {});

}  // namespace icnof
