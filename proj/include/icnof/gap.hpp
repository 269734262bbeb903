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

/// Label of a row in the per-regime coding-scheme table, e.g. 2.7 or 3.1 (mirrored).
struct CaseId {
    int group = 1;
    int sub = 1;
    bool mirrored = false;

    std::string label() const;
    bool operator==(const CaseId&) const = default;
};

struct SchemeChoice {
    CaseId id;
    CodingScheme scheme;
};

/// Closed-form splitting fraction for pair i, clamped into [0, 1].
double mu_star(const ChannelParams& params, User i);

/// Case classification and the coding scheme used by the gap ledger.
SchemeChoice select_scheme(const ChannelParams& params);

/**
 * Per-family gaps between converse and achievable family bounds. The
 * aggregate is delta = max(d_r1, d_r2, d_2r / 2, d_3r1 / 3, d_3r2 / 3).
 */
struct GapLedger {
    double d_r1 = 0.0;
    double d_r2 = 0.0;
    double d_2r = 0.0;
    double d_3r1 = 0.0;
    double d_3r2 = 0.0;
    double delta = 0.0;
    /// Same aggregate computed from the unreduced bound fields instead of the active ones.
    double delta_literal = 0.0;
    CaseId case_id;
    CodingScheme scheme;
    BoundSet converse_families;
    BoundSet achievable_families;
};

/// Fills the d-fields and delta from two family-bound vectors; negative gaps are clamped to 0.
GapLedger ledger_from_families(const BoundSet& converse, const BoundSet& achievable);

/// Active family bounds of one polytope: its support in each of the five directions.
BoundSet active_families(const BoundSet& b);

/// Family-wise max over the converse rho grid of the active (or literal) bounds.
BoundSet converse_families(const ChannelParams& params, std::size_t rho_steps, bool active = true);

GapLedger ledger_gap(const ChannelParams& params, std::size_t rho_steps = 257);

/**
 * Inner region used for gap measurements: the achievable grid union plus the
 * polytope of the table scheme, whose closed-form fractions are generally off the grid.
 */
Region gap_inner_region(const ChannelParams& params, const GridSpec& grid = {});

/// Definition-2 gap between the converse and achievable unions at the given grid resolution.
GapResult numeric_gap(const ChannelParams& params, const GridSpec& grid = {});

struct DbRange {
    double lo = 10.0;
    double hi = 60.0;
};

struct SamplerRanges {
    DbRange snr;
    DbRange inr;
    DbRange fb;
};

/// Uniform draw on [0, 1) with 53 random bits.
double uniform01(std::mt19937_64& rng);

/// Six parameters drawn uniformly in dB over the ranges; draws with INR <= 1 are rejected.
ChannelParams sample_channel(std::mt19937_64& rng, const SamplerRanges& ranges);

/// Random channel satisfying the Case 1.1 conditions (both pairs in high interference, weak feedback).
ChannelParams sample_case11_channel(std::mt19937_64& rng, const DbRange& snr_range = {10.0, 60.0});

struct Theorem3Options {
    std::uint64_t seed = 42;
    std::size_t samples = 200;
    SamplerRanges ranges;
    GridSpec grid;
    double bound = 4.4;
    double slack = 0.05;
    double containment_eps = 1e-9;
    /// Test hook: measure the converse region against itself instead of the achievable region.
    bool self_gap = false;
};

struct ChannelCheck {
    ChannelParams params;
    CaseId case_id;
    double xi = 0.0;
    double delta = 0.0;
    std::size_t achievable_samples = 0;
    std::size_t containment_violations = 0;
};

struct Violation {
    std::size_t index = 0;
    std::string kind;  // "gap", "containment" or "ledger"
    double value = 0.0;
};

struct Theorem3Report {
    std::uint64_t seed = 0;
    std::string generator = "mt19937_64";
    double bound = 4.4;
    double slack = 0.05;
    std::vector<ChannelCheck> checks;
    std::vector<Violation> violations;

    double max_xi() const;
    double max_delta() const;
    std::size_t containment_violations() const;
    bool passed() const { return violations.empty(); }
    /// Throws VerificationFailure listing the offending parameter tuples unless passed().
    void require_pass() const;
};

Theorem3Report verify_theorem3(const Theorem3Options& options);

/// Inclusive arithmetic grid lo, lo + step, ..., up to hi.
struct AxisRange {
    double lo = 0.0;
    double hi = 0.0;
    double step = 1.0;

    std::vector<double> values() const;
};

struct SurfaceCell {
    double alpha = 0.0;
    double beta = 0.0;
    std::optional<double> xi;  // empty where INR <= 1
};

/// Numeric gap over the symmetric (alpha, beta) grid at a fixed linear SNR, alpha-major order.
std::vector<SurfaceCell> sweep_alpha_beta(double snr, const AxisRange& alphas, const AxisRange& betas,
                                          const GridSpec& grid = {});

}  // namespace icnof
