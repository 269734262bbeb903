#include "icnof/converse.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "icnof/achievable.hpp"
#include "icnof/errors.hpp"
#include "icnof/parallel.hpp"

namespace icnof {

namespace {

double hl(double x) { return 0.5 * std::log2(x); }

double pos(double x) { return std::max(x, 0.0); }

void check_unit(double rho) {
    if (!(rho >= 0.0 && rho <= 1.0)) {
        std::ostringstream os;
        os << "rho = " << rho << " outside [0, 1]";
        throw DomainError(os.str());
    }
}

double b1(const ChannelParams& p, User i, double rho) {
    return p.snr(i) + 2.0 * rho * std::sqrt(p.snr(i) * p.inr(i)) + p.inr(i);
}

struct Kappa6 {
    double value;
    int branch;
};

Kappa6 kappa6(const ChannelParams& p, const ConverseAuxTerms& b, double rho, const ScenarioPair& sc) {
    const double s1 = p.snr1(), s2 = p.snr2();
    const double i12 = p.inr12(), i21 = p.inr21();
    const double f1 = p.snr_fb1(), f2 = p.snr_fb2();
    const double b11 = b1(p, 0, rho), b12 = b1(p, 1, rho);
    const double b11_1 = b1(p, 0, 1.0), b12_1 = b1(p, 1, 1.0);
    const double b31 = b.b3[0], b32 = b.b3[1];
    const double b51 = b.b5[0], b52 = b.b5[1];
    const double b61 = b.b6[0], b62 = b.b6[1];

    const bool g1 = weak_cross_scenario(sc.s1);
    const bool g2 = weak_cross_scenario(sc.s2);

    if (!g2 && !g1) {
        const double v = hl(b11 + b51 * i21) - hl(1 + i12) + hl(1 + b52 * f2 / (b12_1 + 1)) +
                         hl(b12 + b51 * i21) - hl(1 + i21) + hl(1 + b51 * f1 / (b11_1 + 1)) + kLog2TwoPiE;
        return {v, 1};
    }
    if (!g2 && g1) {
        const double v = hl(b62 + b51 * i21 / s2 * (s2 + b32)) - hl(1 + i12) +
                         hl(1 + b51 * f1 / (b11_1 + 1)) + hl(b11 + b51 * i21) - hl(1 + i21) +
                         hl(1 + b52 / s2 * (i12 + b32 * f2 / (b12_1 + 1))) - hl(1 + b51 * i21 / s2) +
                         kLog2TwoPiE;
        return {v, 2};
    }
    if (g2 && !g1) {
        const double v = hl(b61 + b51 * i21 / s1 * (s1 + b31)) - hl(1 + i12) +
                         hl(1 + b52 * f2 / (b12_1 + 1)) + hl(b12 + b51 * i21) - hl(1 + i21) +
                         hl(1 + b51 / s1 * (i21 + b31 * f1 / (b11_1 + 1))) - hl(1 + b51 * i21 / s1) +
                         kLog2TwoPiE;
        return {v, 3};
    }
    const double v = hl(b61 + b51 * i21 / s1 * (s1 + b31)) - hl(1 + i12) - hl(1 + i21) +
                     hl(1 + b52 / s2 * (i12 + b32 * f2 / (b12_1 + 1))) - hl(1 + b51 * i21 / s2) -
                     hl(1 + b51 * i21 / s1) + hl(b62 + b51 * i21 / s2 * (s2 + b32)) +
                     hl(1 + b51 / s1 * (i21 + b31 * f1 / (b11_1 + 1))) + kLog2TwoPiE;
    return {v, 4};
}

Kappa6 kappa7(const ChannelParams& p, const ConverseAuxTerms& b, double rho, User i, Scenario s) {
    const User j = other(i);
    const double iij = p.inr(i), iji = p.inr(j);
    const double sj = p.snr(j), fj = p.fb(j);
    const double b1j_1 = b1(p, j, 1.0);
    const double b1i = b1(p, i, rho);
    if (weak_cross_scenario(s)) {
        const double v = hl(b1i + 1) - hl(1 + iij) - hl(1 + b.b5[j]) + hl(1 + b.b4[i] + b.b5[j]) +
                         hl(1 + (1 - rho * rho) * iji / sj * (iij + b.b3[j] * fj / (b1j_1 + 1))) -
                         hl(1 + b.b5[i] * iji / sj) + hl(b.b6[j] + b.b5[i] * iji / sj * (sj + b.b3[j])) +
                         2.0 * kLog2TwoPiE;
        return {v, 2};
    }
    const double v = hl(b1i + 1) - hl(1 + iij) + hl(1 + b.b5[j] * fj / (b1j_1 + 1)) +
                     hl(b1(p, j, rho) + b.b5[i] * iji) + hl(1 + b.b4[i] + b.b5[j]) - hl(1 + b.b5[j]) +
                     2.0 * kLog2TwoPiE;
    return {v, 1};
}

}  // namespace

ConverseAuxTerms converse_aux(const ChannelParams& params, double rho) {
    check_unit(rho);
    ConverseAuxTerms t{};
    const double shrink = 1.0 - rho * rho;
    for (User i = 0; i < 2; ++i) {
        const User j = other(i);
        const double s = params.snr(i);
        const double iij = params.inr(i);
        const double iji = params.inr(j);
        t.b3[i] = s - 2.0 * std::sqrt(s * iji) + iji;
        t.b4[i] = shrink * s;
        t.b5[i] = shrink * iij;
        t.b6[i] = s + iij + 2.0 * rho * std::sqrt(iij) * (std::sqrt(s) - std::sqrt(iji)) +
                  iij * std::sqrt(iji) / s * (std::sqrt(iji) - 2.0 * std::sqrt(s));
    }
    return t;
}

ConverseEvaluation theorem2_bounds(const ChannelParams& params, double rho) {
    const ConverseAuxTerms b = converse_aux(params, rho);
    ConverseEvaluation e;
    e.rho = rho;
    e.scenarios = classify(params);
    for (User i = 0; i < 2; ++i) {
        const User j = other(i);
        const double b4i = b.b4[i];
        const double b5j = b.b5[j];
        e.k1[i] = pos(hl(b1(params, i, rho) + 1));
        e.k2[i] = pos(hl(1 + b5j) + hl(1 + b4i / (1 + b5j)));
        e.k3[i] = pos(hl((b4i + b5j + 1) * params.fb(j) / ((b1(params, j, 1.0) + 1) * (b4i + 1)) + 1) +
                      hl(b4i + 1));
        const Kappa6 k7 = kappa7(params, b, rho, i, e.scenarios[i]);
        e.k7[i] = pos(k7.value);
        e.k7_branch[i] = k7.branch;
    }
    e.k4 = pos(hl(1 + b.b4[0] / (1 + b.b5[1])) + hl(b1(params, 1, rho) + 1));
    e.k5 = pos(hl(1 + b.b4[1] / (1 + b.b5[0])) + hl(b1(params, 0, rho) + 1));
    const Kappa6 k6 = kappa6(params, b, rho, e.scenarios);
    e.k6 = pos(k6.value);
    e.k6_branch = k6.branch;
    return e;
}

BoundSet to_bound_set(const ConverseEvaluation& e) noexcept {
    BoundSet b;
    b.c_r1 = std::min({e.k1[0], e.k2[0], e.k3[0]});
    b.c_r2 = std::min({e.k1[1], e.k2[1], e.k3[1]});
    b.c_sum = std::min({e.k4, e.k5, e.k6});
    b.c_2r1_r2 = e.k7[0];
    b.c_r1_2r2 = e.k7[1];
    return clamped(b);
}

Region converse_union(const ChannelParams& params, std::size_t rho_steps, unsigned threads) {
    const std::size_t n = std::max<std::size_t>(rho_steps, 1);
    std::vector<BoundSet> sets(n);
    parallel_for(n, threads, [&](std::size_t k) {
        sets[k] = to_bound_set(theorem2_bounds(params, grid_point(1.0, n, k)));
    });
    return Region(std::move(sets));
}

}  // namespace icnof
