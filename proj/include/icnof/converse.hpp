#pragma once

#include <array>
#include <cstddef>

#include "icnof/channel.hpp"
#include "icnof/region.hpp"

namespace icnof {

/// log2(2*pi*e), the differential-entropy constant that appears in kappa6 and kappa7.
inline constexpr double kLog2TwoPiE = 4.0941911703612822;

struct ConverseAuxTerms {
    std::array<double, 2> b3;  // constants
    std::array<double, 2> b4;
    std::array<double, 2> b5;
    std::array<double, 2> b6;
};

/// Throws DomainError unless 0 <= rho <= 1.
ConverseAuxTerms converse_aux(const ChannelParams& params, double rho);

/**
 * All kappa values at one correlation rho, clamped at 0. Index [i] is pair i.
 * `k6_branch` is 1..4 and `k7_branch[i]` is 1 or 2, both fixed by the scenario pair.
 */
struct ConverseEvaluation {
    double rho = 0.0;
    std::array<double, 2> k1{};
    std::array<double, 2> k2{};
    std::array<double, 2> k3{};
    double k4 = 0.0;
    double k5 = 0.0;
    double k6 = 0.0;
    std::array<double, 2> k7{};
    int k6_branch = 1;
    std::array<int, 2> k7_branch{1, 1};
    ScenarioPair scenarios{Scenario::S1, Scenario::S1};
};

ConverseEvaluation theorem2_bounds(const ChannelParams& params, double rho);

/// Five-bound polytope of one converse evaluation.
BoundSet to_bound_set(const ConverseEvaluation& eval) noexcept;

/// Union over `rho_steps` uniform points on [0, 1]; a single step yields {0}.
Region converse_union(const ChannelParams& params, std::size_t rho_steps = 257, unsigned threads = 1);

}  // namespace icnof
