#include "icnof/achievable.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "icnof/errors.hpp"
#include "icnof/parallel.hpp"

namespace icnof {

namespace {

double half_log2(double x) { return 0.5 * std::log2(x); }

double pos(double x) { return std::max(x, 0.0); }

double b1_at(const ChannelParams& p, User i, double rho) {
    return p.snr(i) + 2.0 * rho * std::sqrt(p.snr(i) * p.inr(i)) + p.inr(i);
}

double b2_at(const ChannelParams& p, User i, double rho) { return (1.0 - rho) * p.inr(i) - 1.0; }

void check_rho(const ChannelParams& params, double rho) {
    if (!(rho >= 0.0 && rho <= rho_max(params))) {
        std::ostringstream os;
        os << "rho = " << rho << " outside [0, " << rho_max(params) << "]";
        throw DomainError(os.str());
    }
}

}  // namespace

double rho_max(const ChannelParams& params) noexcept {
    return std::max(0.0, 1.0 - std::max(1.0 / params.inr12(), 1.0 / params.inr21()));
}

void validate(const CodingScheme& scheme, const ChannelParams& params) {
    check_rho(params, scheme.rho);
    for (double mu : {scheme.mu1, scheme.mu2}) {
        if (!(mu >= 0.0 && mu <= 1.0)) {
            std::ostringstream os;
            os << "mu = " << mu << " outside [0, 1]";
            throw DomainError(os.str());
        }
    }
}

AuxTerms aux_terms(const ChannelParams& params, double rho) {
    check_rho(params, rho);
    AuxTerms t{};
    for (User i = 0; i < 2; ++i) {
        t.b1[i] = b1_at(params, i, rho);
        t.b2[i] = b2_at(params, i, rho);
        t.b1_at1[i] = b1_at(params, i, 1.0);
    }
    return t;
}

AchievableTerms a_terms(const ChannelParams& params, const CodingScheme& scheme) {
    validate(scheme, params);
    const AuxTerms b = aux_terms(params, scheme.rho);
    AchievableTerms a{};
    for (User i = 0; i < 2; ++i) {
        const User j = other(i);
        const double ratio = params.snr(i) / params.inr(j);  // SNR_i / INR_ji
        const double fb = params.fb(i);
        const double mu_i = scheme.mu(i);
        const double mu_j = scheme.mu(j);
        a.a1[i] = pos(half_log2(2.0 + ratio) - 0.5);
        a.a2[i] = pos(half_log2(b.b1[i] + 1.0) - 0.5);
        a.a3[i] = pos(half_log2((fb * (b.b2[i] + 2.0) + b.b1_at1[i] + 1.0) /
                                (fb * ((1.0 - mu_j) * b.b2[i] + 2.0) + b.b1_at1[i] + 1.0)));
        a.a4[i] = pos(half_log2((1.0 - mu_j) * b.b2[i] + 2.0) - 0.5);
        a.a5[i] = pos(half_log2(2.0 + ratio + (1.0 - mu_j) * b.b2[i]) - 0.5);
        a.a6[i] = pos(half_log2(ratio * ((1.0 - mu_i) * b.b2[j] + 1.0) + 2.0) - 0.5);
        a.a7[i] = pos(half_log2(ratio * ((1.0 - mu_i) * b.b2[j] + 1.0) + (1.0 - mu_j) * b.b2[i] + 2.0) - 0.5);
    }
    return a;
}

BoundSet theorem1_bounds(const AchievableTerms& a) {
    // Index 0 is pair 1, index 1 is pair 2.
    const auto& a1 = a.a1;
    const auto& a2 = a.a2;
    const auto& a3 = a.a3;
    const auto& a4 = a.a4;
    const auto& a5 = a.a5;
    const auto& a6 = a.a6;
    const auto& a7 = a.a7;
    BoundSet b;
    b.c_r1 = std::min({a2[0], a6[0] + a3[1], a1[0] + a3[1] + a4[1]});
    b.c_r2 = std::min({a2[1], a3[0] + a6[1], a3[0] + a4[0] + a1[1]});
    b.c_sum = std::min({a2[0] + a1[1],
                        a1[0] + a2[1],
                        a3[0] + a1[0] + a3[1] + a7[1],
                        a3[0] + a5[0] + a3[1] + a5[1],
                        a3[0] + a7[0] + a3[1] + a1[1]});
    b.c_2r1_r2 = std::min({a2[0] + a1[0] + a3[1] + a7[1],
                           a3[0] + a1[0] + a7[0] + 2.0 * a3[1] + a5[1],
                           a2[0] + a1[0] + a3[1] + a5[1]});
    b.c_r1_2r2 = std::min({a3[0] + a5[0] + a2[1] + a1[1],
                           a3[0] + a7[0] + a2[1] + a1[1],
                           2.0 * a3[0] + a5[0] + a3[1] + a1[1] + a7[1]});
    return clamped(b);
}

BoundSet theorem1_bounds(const ChannelParams& params, const CodingScheme& scheme) {
    return theorem1_bounds(a_terms(params, scheme));
}

double grid_point(double hi, std::size_t steps, std::size_t k) noexcept {
    if (steps <= 1) return 0.0;
    if (k + 1 == steps) return hi;
    return hi * static_cast<double>(k) / static_cast<double>(steps - 1);
}

Region achievable_union(const ChannelParams& params, const GridSpec& grid) {
    const std::size_t nr = std::max<std::size_t>(grid.rho_steps, 1);
    const std::size_t nm = std::max<std::size_t>(grid.mu_steps, 1);
    const double rmax = rho_max(params);
    std::vector<BoundSet> sets(nr * nm * nm);
    parallel_for(nr, grid.threads, [&](std::size_t kr) {
        const double rho = grid_point(rmax, nr, kr);
        for (std::size_t k1 = 0; k1 < nm; ++k1) {
            for (std::size_t k2 = 0; k2 < nm; ++k2) {
                const CodingScheme scheme{rho, grid_point(1.0, nm, k1), grid_point(1.0, nm, k2)};
                sets[(kr * nm + k1) * nm + k2] = theorem1_bounds(params, scheme);
            }
        }
    });
    return Region(std::move(sets));
}

}  // namespace icnof
