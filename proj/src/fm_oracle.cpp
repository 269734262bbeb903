#include "icnof/fm_oracle.hpp"

#include <algorithm>
#include <sstream>

#include "icnof/errors.hpp"
#include "icnof/gap.hpp"
#include "icnof/parallel.hpp"

namespace icnof {

namespace {

double grid_value(double hi, std::size_t n, std::size_t k) {
    return n <= 1 ? 0.0 : hi * static_cast<double>(k) / static_cast<double>(n - 1);
}

}  // namespace

ThetaVector ThetaVector::uniform(double v) {
    ThetaVector t;
    for (auto& row : t.values) row = {v, v};
    return t;
}

ThetaVector theta_from_scheme(const ChannelParams& params, const CodingScheme& scheme) {
    const AchievableTerms a = a_terms(params, scheme);
    ThetaVector t;
    for (User i = 0; i < 2; ++i) {
        t(1, i) = a.a3[i];
        t(2, i) = a.a2[i];
        t(3, i) = a.a4[i];
        t(4, i) = a.a1[i];
        t(5, i) = a.a5[i];
        t(6, i) = a.a6[i];
        t(7, i) = a.a7[i];
    }
    return t;
}

BoundSet fm_bounds(const ThetaVector& t) {
    auto th = [&](int l, int i) { return t(l, i - 1); };
    BoundSet b;
    b.c_r1 = std::min({th(2, 1), th(6, 1) + th(1, 2), th(4, 1) + th(1, 2) + th(3, 2)});
    b.c_r2 = std::min({th(2, 2), th(1, 1) + th(6, 2), th(1, 1) + th(3, 1) + th(4, 2)});
    b.c_sum = std::min({th(2, 1) + th(4, 2),
                        th(2, 1) + th(6, 2),
                        th(4, 1) + th(2, 2),
                        th(6, 1) + th(2, 2),
                        th(1, 1) + th(3, 1) + th(4, 1) + th(1, 2) + th(5, 2),
                        th(1, 1) + th(7, 1) + th(1, 2) + th(5, 2),
                        th(1, 1) + th(4, 1) + th(1, 2) + th(7, 2),
                        th(1, 1) + th(5, 1) + th(1, 2) + th(3, 2) + th(4, 2),
                        th(1, 1) + th(5, 1) + th(1, 2) + th(5, 2),
                        th(1, 1) + th(7, 1) + th(1, 2) + th(4, 2)});
    b.c_2r1_r2 = std::min({th(2, 1) + th(4, 1) + th(1, 2) + th(7, 2),
                           th(1, 1) + th(4, 1) + th(7, 1) + 2.0 * th(1, 2) + th(5, 2),
                           th(2, 1) + th(4, 1) + th(1, 2) + th(5, 2)});
    b.c_r1_2r2 = std::min({th(1, 1) + th(5, 1) + th(2, 2) + th(4, 2),
                           th(1, 1) + th(7, 1) + th(2, 2) + th(4, 2),
                           2.0 * th(1, 1) + th(5, 1) + th(1, 2) + th(4, 2) + th(7, 2)});
    return b;
}

double split_slack(const ThetaVector& theta, RatePair p, const RateSplit& s) {
    const double rates[2] = {p.r1, p.r2};
    double slack = kInf;
    for (User i = 0; i < 2; ++i) {
        const User j = other(i);
        slack = std::min({slack, s.r_c1[i], s.r_c2[i], s.r_p[i]});
        slack = std::min(slack, -std::abs(s.r_c1[i] + s.r_c2[i] + s.r_p[i] - rates[i]));
        slack = std::min(slack, theta(1, i) - s.r_c1[j]);
        slack = std::min(slack, theta(2, i) - (rates[i] + s.r_c1[j] + s.r_c2[j]));
        slack = std::min(slack, theta(3, i) - s.r_c2[j]);
        slack = std::min(slack, theta(4, i) - s.r_p[i]);
        slack = std::min(slack, theta(5, i) - (s.r_p[i] + s.r_c2[j]));
        slack = std::min(slack, theta(6, i) - (s.r_c2[i] + s.r_p[i]));
        slack = std::min(slack, theta(7, i) - (s.r_c2[i] + s.r_p[i] + s.r_c2[j]));
    }
    return slack;
}

std::optional<RateSplit> find_split(const ThetaVector& t, RatePair p, std::size_t resolution) {
    const double R1 = p.r1;
    const double R2 = p.r2;
    if (R1 < 0.0 || R2 < 0.0) return std::nullopt;
    const std::size_t n1 = R1 > 0.0 ? resolution : 1;
    const std::size_t n2 = R2 > 0.0 ? resolution : 1;

    for (std::size_t k1 = 0; k1 < n1; ++k1) {
        const double u1 = grid_value(R1, n1, k1);
        if (u1 > t(1, 1) || R1 - u1 > t(6, 0)) continue;
        for (std::size_t k2 = 0; k2 < n2; ++k2) {
            const double u2 = grid_value(R2, n2, k2);
            if (u2 > t(1, 0) || R2 - u2 > t(6, 1)) continue;

            // x is the second common layer of pair 1, y the one of pair 2.
            const double xl = std::max(0.0, R1 - u1 - t(4, 0));
            const double xu = std::min({R1 - u1, t(2, 1) - R2 - u1, t(3, 1), t(7, 1) - R2 + u2});
            const double yl = std::max(0.0, R2 - u2 - t(4, 1));
            const double yu = std::min({R2 - u2, t(2, 0) - R1 - u2, t(3, 0), t(7, 0) - R1 + u1});
            if (xl > xu || yl > yu) continue;
            const double d_hi = std::min(yu - xl, t(5, 0) - R1 + u1);   // y - x <= ...
            const double d_lo = std::max(yl - xu, -(t(5, 1) - R2 + u2));  // x - y <= ...
            if (d_lo > d_hi) continue;

            const double x = std::max(xl, yl - d_lo);
            const double y = x + d_lo;
            RateSplit s;
            s.r_c1 = {u1, u2};
            s.r_c2 = {x, y};
            s.r_p = {std::max(R1 - u1 - x, 0.0), std::max(R2 - u2 - y, 0.0)};
            return s;
        }
    }
    return std::nullopt;
}

bool split_feasible(const ThetaVector& theta, RatePair p, std::size_t resolution) {
    return find_split(theta, p, resolution).has_value();
}

EquivalenceReport equivalence_check(const ThetaVector& theta, std::size_t rate_grid, std::size_t resolution,
                                    double fp_tol) {
    if (rate_grid < 2) throw InputError("rate grid needs at least 2 points per axis");
    if (resolution < 2) throw InputError("split resolution needs at least 2 points");
    const BoundSet fb = fm_bounds(theta);
    EquivalenceReport report;
    report.margin = 2.0 * std::max(fb.c_r1, fb.c_r2) / static_cast<double>(resolution);
    for (std::size_t a = 0; a < rate_grid; ++a) {
        for (std::size_t b = 0; b < rate_grid; ++b) {
            const RatePair p{grid_value(fb.c_r1, rate_grid, a), grid_value(fb.c_r2, rate_grid, b)};
            const double slack = fb.min_slack(p);
            const std::optional<RateSplit> split = find_split(theta, p, resolution);
            ++report.checked;
            if (split) {
                ++report.feasible;
                const double witness_slack = split_slack(theta, p, *split);
                if (witness_slack < -fp_tol) report.violations.push_back({p, "soundness", witness_slack});
                else if (slack < -fp_tol) report.violations.push_back({p, "soundness", slack});
            } else if (slack >= report.margin) {
                report.violations.push_back({p, "completeness", slack});
            }
        }
    }
    return report;
}

void require_pass(const EquivalenceReport& report) {
    if (report.passed()) return;
    std::ostringstream os;
    os.precision(9);
    os << report.violations.size() << " equivalence violation(s):";
    for (const EquivalenceViolation& v : report.violations)
        os << "\n  " << v.kind << " at (" << v.point.r1 << ", " << v.point.r2 << "), slack " << v.slack;
    throw EquivalenceFailure(os.str());
}

ThetaVector random_scheme_theta(std::mt19937_64& rng) {
    const ChannelParams params = sample_channel(rng, {});
    const double rho = rho_max(params) * uniform01(rng);
    const double mu1 = uniform01(rng);
    const double mu2 = uniform01(rng);
    return theta_from_scheme(params, {rho, mu1, mu2});
}

ThetaVector adversarial_theta(std::mt19937_64& rng) {
    ThetaVector t = random_scheme_theta(rng);
    for (User i = 0; i < 2; ++i) t(2, i) = t(4, i) * (0.05 + 0.25 * uniform01(rng));
    return t;
}

FmCheckSummary fm_check(std::uint64_t seed, std::size_t samples, std::size_t adversarial, std::size_t resolution,
                        std::size_t rate_grid, unsigned threads) {
    std::mt19937_64 rng(seed);
    std::vector<ThetaVector> thetas;
    for (std::size_t k = 0; k < samples; ++k) thetas.push_back(random_scheme_theta(rng));
    for (std::size_t k = 0; k < adversarial; ++k) thetas.push_back(adversarial_theta(rng));

    std::vector<EquivalenceReport> reports(thetas.size());
    parallel_for(thetas.size(), threads,
                 [&](std::size_t k) { reports[k] = equivalence_check(thetas[k], rate_grid, resolution); });

    FmCheckSummary summary;
    summary.seed = seed;
    summary.vectors = samples;
    summary.adversarial = adversarial;
    for (std::size_t k = 0; k < reports.size(); ++k) {
        summary.points += reports[k].checked;
        for (const EquivalenceViolation& v : reports[k].violations) summary.violations.emplace_back(k, v);
    }
    return summary;
}

}  // namespace icnof
