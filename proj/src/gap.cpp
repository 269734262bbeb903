#include "icnof/gap.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "icnof/converse.hpp"
#include "icnof/errors.hpp"
#include "icnof/parallel.hpp"

namespace icnof {

namespace {

SchemeChoice mirror(const SchemeChoice& c) {
    SchemeChoice out = c;
    out.id.mirrored = true;
    out.scheme = c.scheme.swapped();
    return out;
}

// Returns nothing when the channel only matches the table after relabeling the pairs.
std::optional<SchemeChoice> select_direct(const ChannelParams& p) {
    const bool hir1 = p.inr12() > p.snr1();
    const bool hir2 = p.inr21() > p.snr2();

    if (hir1 && hir2) {
        const bool low2 = p.snr_fb2() <= p.snr1();
        const bool low1 = p.snr_fb1() <= p.snr2();
        if (low2 && low1) return SchemeChoice{{1, 1, false}, {0.0, 0.0, 0.0}};
        if (!low2 && !low1) return SchemeChoice{{1, 2, false}, {0.0, 1.0, 1.0}};
        if (low2 && !low1) return SchemeChoice{{1, 3, false}, {0.0, 0.0, 1.0}};
        return std::nullopt;
    }

    if (!hir1 && !hir2) {
        const double prod = p.inr12() * p.inr21();
        const bool high1 = prod > p.snr1();
        const bool high2 = prod > p.snr2();
        const bool fb1_low = high1 ? p.snr_fb1() <= p.inr21() : p.snr_fb1() * p.inr12() <= p.snr1();
        const bool fb2_low = high2 ? p.snr_fb2() <= p.inr12() : p.snr_fb2() * p.inr21() <= p.snr2();
        const int offset = high1 ? (high2 ? 1 : 2) : (high2 ? 3 : 4);
        if (fb1_low && fb2_low) return SchemeChoice{{2, offset, false}, {0.0, 0.0, 0.0}};
        if (!fb1_low && !fb2_low)
            return SchemeChoice{{2, 4 + offset, false}, {0.0, mu_star(p, 0), mu_star(p, 1)}};
        if (!fb1_low && fb2_low) return SchemeChoice{{2, 8 + offset, false}, {0.0, 0.0, mu_star(p, 1)}};
        return std::nullopt;
    }

    if (hir1 && !hir2) {
        const double prod = p.inr12() * p.inr21();
        if (prod > p.snr2()) {
            if (p.snr_fb2() <= p.inr12()) return SchemeChoice{{3, 1, false}, {0.0, 0.0, 0.0}};
            return SchemeChoice{{3, 3, false}, {0.0, 1.0, 0.0}};
        }
        if (p.snr_fb2() * p.inr21() <= p.snr2()) return SchemeChoice{{3, 2, false}, {0.0, 0.0, 0.0}};
        return SchemeChoice{{3, 4, false}, {0.0, 1.0, 0.0}};
    }
    return std::nullopt;
}

double weighted_gap(double conv, double ach) { return std::max(conv - ach, 0.0); }

std::string describe(const ChannelParams& p) {
    std::ostringstream os;
    os.precision(9);
    os << "(" << p.snr1() << ", " << p.snr2() << ", " << p.inr12() << ", " << p.inr21() << ", " << p.snr_fb1()
       << ", " << p.snr_fb2() << ")";
    return os.str();
}

double draw_db(std::mt19937_64& rng, const DbRange& r) { return r.lo + (r.hi - r.lo) * uniform01(rng); }

}  // namespace

std::string CaseId::label() const {
    std::string s = std::to_string(group) + "." + std::to_string(sub);
    if (mirrored) s += " (mirrored)";
    return s;
}

double mu_star(const ChannelParams& p, User i) {
    const User j = other(i);
    const double inr = p.inr(j);  // INR_ji
    const double fb = p.fb(j);
    const double mu = inr * inr * fb / ((inr - 1.0) * (inr * fb + p.snr(j)));
    return std::clamp(mu, 0.0, 1.0);
}

SchemeChoice select_scheme(const ChannelParams& params) {
    if (auto direct = select_direct(params)) return *direct;
    if (auto swapped = select_direct(params.swapped())) return mirror(*swapped);
    throw std::logic_error("coding-scheme table has no row for " + describe(params));
}

GapLedger ledger_from_families(const BoundSet& converse, const BoundSet& achievable) {
    GapLedger g;
    g.d_r1 = weighted_gap(converse.c_r1, achievable.c_r1);
    g.d_r2 = weighted_gap(converse.c_r2, achievable.c_r2);
    g.d_2r = weighted_gap(converse.c_sum, achievable.c_sum);
    g.d_3r1 = weighted_gap(converse.c_2r1_r2, achievable.c_2r1_r2);
    g.d_3r2 = weighted_gap(converse.c_r1_2r2, achievable.c_r1_2r2);
    g.delta = std::max({g.d_r1, g.d_r2, g.d_2r / 2.0, g.d_3r1 / 3.0, g.d_3r2 / 3.0});
    g.delta_literal = g.delta;
    g.converse_families = converse;
    g.achievable_families = achievable;
    return g;
}

BoundSet active_families(const BoundSet& b) {
    return {b.support(kFamilyDirections[0]), b.support(kFamilyDirections[1]), b.support(kFamilyDirections[2]),
            b.support(kFamilyDirections[3]), b.support(kFamilyDirections[4])};
}

BoundSet converse_families(const ChannelParams& params, std::size_t rho_steps, bool active) {
    const Region conv = converse_union(params, rho_steps);
    BoundSet out{0.0, 0.0, 0.0, 0.0, 0.0};
    for (const BoundSet& b : conv.bound_sets()) {
        const BoundSet f = active ? active_families(b) : b;
        out.c_r1 = std::max(out.c_r1, f.c_r1);
        out.c_r2 = std::max(out.c_r2, f.c_r2);
        out.c_sum = std::max(out.c_sum, f.c_sum);
        out.c_2r1_r2 = std::max(out.c_2r1_r2, f.c_2r1_r2);
        out.c_r1_2r2 = std::max(out.c_r1_2r2, f.c_r1_2r2);
    }
    return out;
}

GapLedger ledger_gap(const ChannelParams& params, std::size_t rho_steps) {
    const SchemeChoice choice = select_scheme(params);
    const BoundSet ach = theorem1_bounds(params, choice.scheme);
    GapLedger g = ledger_from_families(converse_families(params, rho_steps, true), active_families(ach));
    g.delta_literal = ledger_from_families(converse_families(params, rho_steps, false), ach).delta;
    g.case_id = choice.id;
    g.scheme = choice.scheme;
    return g;
}

Region gap_inner_region(const ChannelParams& params, const GridSpec& grid) {
    const Region grid_union = achievable_union(params, grid);
    std::vector<BoundSet> sets(grid_union.bound_sets().begin(), grid_union.bound_sets().end());
    sets.push_back(theorem1_bounds(params, select_scheme(params).scheme));
    return Region(std::move(sets)).without_dominated();
}

GapResult numeric_gap(const ChannelParams& params, const GridSpec& grid) {
    const Region outer = converse_union(params, grid.conv_rho_steps, grid.threads);
    const Region inner = gap_inner_region(params, grid);
    return gap_xi(outer, inner, {grid.frontier_samples, grid.tol, grid.threads});
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

ChannelParams sample_channel(std::mt19937_64& rng, const SamplerRanges& ranges) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        const double snr1 = db_to_linear(draw_db(rng, ranges.snr));
        const double snr2 = db_to_linear(draw_db(rng, ranges.snr));
        const double inr12 = db_to_linear(draw_db(rng, ranges.inr));
        const double inr21 = db_to_linear(draw_db(rng, ranges.inr));
        const double fb1 = db_to_linear(draw_db(rng, ranges.fb));
        const double fb2 = db_to_linear(draw_db(rng, ranges.fb));
        if (inr12 > 1.0 && inr21 > 1.0) return ChannelParams(snr1, snr2, inr12, inr21, fb1, fb2);
    }
    throw InputError("INR range never produces INR > 1");
}

ChannelParams sample_case11_channel(std::mt19937_64& rng, const DbRange& snr_range) {
    const double snr1_db = draw_db(rng, snr_range);
    const double snr2_db = draw_db(rng, snr_range);
    const double inr12_db = snr1_db + draw_db(rng, {0.5, 20.0});
    const double inr21_db = snr2_db + draw_db(rng, {0.5, 20.0});
    const double fb1_db = draw_db(rng, {0.0, snr2_db});
    const double fb2_db = draw_db(rng, {0.0, snr1_db});
    return ChannelParams(db_to_linear(snr1_db), db_to_linear(snr2_db), db_to_linear(inr12_db),
                         db_to_linear(inr21_db), db_to_linear(fb1_db), db_to_linear(fb2_db));
}

double Theorem3Report::max_xi() const {
    double m = 0.0;
    for (const ChannelCheck& c : checks) m = std::max(m, c.xi);
    return m;
}

double Theorem3Report::max_delta() const {
    double m = 0.0;
    for (const ChannelCheck& c : checks) m = std::max(m, c.delta);
    return m;
}

std::size_t Theorem3Report::containment_violations() const {
    std::size_t n = 0;
    for (const ChannelCheck& c : checks) n += c.containment_violations;
    return n;
}

void Theorem3Report::require_pass() const {
    if (passed()) return;
    std::ostringstream os;
    os.precision(9);
    os << violations.size() << " violation(s):";
    for (const Violation& v : violations)
        os << "\n  " << v.kind << " " << v.value << " at " << describe(checks[v.index].params);
    throw VerificationFailure(os.str());
}

Theorem3Report verify_theorem3(const Theorem3Options& options) {
    if (options.samples == 0) throw InputError("samples must be >= 1");
    std::mt19937_64 rng(options.seed);
    std::vector<ChannelParams> draws;
    draws.reserve(options.samples);
    for (std::size_t k = 0; k < options.samples; ++k) draws.push_back(sample_channel(rng, options.ranges));

    GridSpec inner_grid = options.grid;
    inner_grid.threads = 1;
    const GapOptions gap_options{inner_grid.frontier_samples, inner_grid.tol, 1};

    std::vector<std::optional<ChannelCheck>> slots(draws.size());
    parallel_for(draws.size(), options.grid.threads, [&](std::size_t k) {
        const ChannelParams& p = draws[k];
        const Region outer = converse_union(p, inner_grid.conv_rho_steps);
        const Region inner = options.self_gap ? outer : gap_inner_region(p, inner_grid);
        const GapResult gap = gap_xi(outer, inner, gap_options);
        const GapLedger ledger = ledger_gap(p, inner_grid.conv_rho_steps);

        ChannelCheck check{p, ledger.case_id, gap.xi, ledger.delta, 0, 0};
        const std::vector<RatePair> samples = frontier(inner, inner_grid.frontier_samples);
        check.achievable_samples = samples.size();
        for (const RatePair& s : samples) {
            if (!contains(outer, s, options.containment_eps)) ++check.containment_violations;
        }
        slots[k] = check;
    });

    Theorem3Report report;
    report.seed = options.seed;
    report.bound = options.bound;
    report.slack = options.slack;
    for (std::size_t k = 0; k < slots.size(); ++k) {
        const ChannelCheck& c = *slots[k];
        report.checks.push_back(c);
        if (c.xi > options.bound + options.slack) report.violations.push_back({k, "gap", c.xi});
        if (c.containment_violations > 0)
            report.violations.push_back({k, "containment", static_cast<double>(c.containment_violations)});
        if (c.delta < c.xi - options.slack) report.violations.push_back({k, "ledger", c.delta});
    }
    return report;
}

std::vector<double> AxisRange::values() const {
    if (!(step > 0.0) || !(hi >= lo) || !std::isfinite(lo) || !std::isfinite(hi))
        throw InputError("axis range needs lo <= hi and step > 0");
    const auto n = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = lo + static_cast<double>(k) * step;
    return v;
}

std::vector<SurfaceCell> sweep_alpha_beta(double snr, const AxisRange& alphas, const AxisRange& betas,
                                          const GridSpec& grid) {
    const std::vector<double> as = alphas.values();
    const std::vector<double> bs = betas.values();
    std::vector<SurfaceCell> cells(as.size() * bs.size());
    GridSpec cell_grid = grid;
    cell_grid.threads = 1;
    parallel_for(cells.size(), grid.threads, [&](std::size_t k) {
        SurfaceCell& cell = cells[k];
        cell.alpha = as[k / bs.size()];
        cell.beta = bs[k % bs.size()];
        try {
            cell.xi = numeric_gap(from_symmetric({snr, cell.alpha, cell.beta}), cell_grid).xi;
        } catch (const InterferenceTooWeak&) {
            cell.xi.reset();
        }
    });
    return cells;
}

}  // namespace icnof
