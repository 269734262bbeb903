#include <doctest.h>

#include <random>

#include "icnof/converse.hpp"
#include "icnof/errors.hpp"
#include "icnof/gap.hpp"

using namespace icnof;

namespace {

// Independent restatement of the closed-form splitting fraction.
double mu_formula(double inr_ji, double fb_j, double snr_j) {
    return inr_ji * inr_ji * fb_j / ((inr_ji - 1) * (inr_ji * fb_j + snr_j));
}

}  // namespace

TEST_SUITE("gap") {

TEST_CASE("high-interference cases") {
    // inr12 > snr1, inr21 > snr2
    SchemeChoice c = select_scheme(ChannelParams(10, 10, 20, 20, 5, 5));
    CHECK(c.id == CaseId{1, 1, false});
    CHECK(c.scheme == CodingScheme{0, 0, 0});

    c = select_scheme(ChannelParams(10, 10, 20, 20, 50, 50));
    CHECK(c.id == CaseId{1, 2, false});
    CHECK(c.scheme == CodingScheme{0, 1, 1});

    c = select_scheme(ChannelParams(10, 10, 20, 20, 50, 5));
    CHECK(c.id == CaseId{1, 3, false});
    CHECK(c.scheme == CodingScheme{0, 0, 1});

    c = select_scheme(ChannelParams(10, 10, 20, 20, 5, 50));
    CHECK(c.id == CaseId{1, 3, true});
    CHECK(c.scheme == CodingScheme{0, 1, 0});

    // equality on the feedback comparison stays in the low branch
    CHECK(select_scheme(ChannelParams(10, 10, 20, 20, 10, 10)).id == CaseId{1, 1, false});
}

TEST_CASE("low-interference cases") {
    // prod = 400 > snr for both, fb below the cross INRs
    SchemeChoice c = select_scheme(ChannelParams(100, 100, 20, 20, 10, 10));
    CHECK(c.id == CaseId{2, 1, false});
    CHECK(c.scheme == CodingScheme{0, 0, 0});

    c = select_scheme(ChannelParams(100, 100, 20, 20, 50, 50));
    CHECK(c.id == CaseId{2, 5, false});
    CHECK(c.scheme.rho == 0.0);
    CHECK(c.scheme.mu1 == doctest::Approx(std::clamp(mu_formula(20, 50, 100), 0.0, 1.0)));
    CHECK(c.scheme.mu2 == doctest::Approx(std::clamp(mu_formula(20, 50, 100), 0.0, 1.0)));

    c = select_scheme(ChannelParams(100, 100, 20, 20, 50, 10));
    CHECK(c.id == CaseId{2, 9, false});
    CHECK(c.scheme.mu1 == 0.0);
    CHECK(c.scheme.mu2 == doctest::Approx(mu_formula(20, 50, 100)));

    c = select_scheme(ChannelParams(100, 100, 20, 20, 10, 50));
    CHECK(c.id == CaseId{2, 9, true});
    CHECK(c.scheme.mu2 == 0.0);
    CHECK(c.scheme.mu1 == doctest::Approx(mu_formula(20, 50, 100)));

    // prod = 100 < snr = 1000: the feedback test scales by the INR
    c = select_scheme(ChannelParams(1000, 1000, 10, 10, 50, 50));
    CHECK(c.id == CaseId{2, 4, false});
    c = select_scheme(ChannelParams(1000, 1000, 10, 10, 200, 200));
    CHECK(c.id == CaseId{2, 8, false});
    // prod = 400 lies between the two SNRs
    CHECK(select_scheme(ChannelParams(100, 1000, 20, 20, 10, 40)).id == CaseId{2, 2, false});
    CHECK(select_scheme(ChannelParams(1000, 200, 10, 40, 50, 2)).id == CaseId{2, 3, false});
}

TEST_CASE("mixed-regime cases") {
    // pair 1 high (inr12 > snr1), pair 2 low
    SchemeChoice c = select_scheme(ChannelParams(10, 100, 20, 30, 1, 10));
    CHECK(c.id == CaseId{3, 1, false});
    CHECK(c.scheme == CodingScheme{0, 0, 0});
    c = select_scheme(ChannelParams(10, 100, 20, 30, 1, 30));
    CHECK(c.id == CaseId{3, 3, false});
    CHECK(c.scheme == CodingScheme{0, 1, 0});
    c = select_scheme(ChannelParams(10, 1000, 20, 30, 1, 30));
    CHECK(c.id == CaseId{3, 2, false});
    c = select_scheme(ChannelParams(10, 1000, 20, 30, 1, 40));
    CHECK(c.id == CaseId{3, 4, false});
    CHECK(c.scheme == CodingScheme{0, 1, 0});

    c = select_scheme(ChannelParams(100, 10, 30, 20, 10, 1));
    CHECK(c.id == CaseId{3, 1, true});
    c = select_scheme(ChannelParams(100, 10, 30, 20, 30, 1));
    CHECK(c.id == CaseId{3, 3, true});
    CHECK(c.scheme == CodingScheme{0, 0, 1});
}

TEST_CASE("the table is total and mirrors consistently") {
    std::mt19937_64 rng(41);
    for (int k = 0; k < 10000; ++k) {
        const ChannelParams p = sample_channel(rng, {{0, 60}, {0.5, 60}, {-10, 70}});
        const SchemeChoice c = select_scheme(p);
        CHECK_NOTHROW(validate(c.scheme, p));
        const SchemeChoice m = select_scheme(p.swapped());
        CHECK(m.scheme == c.scheme.swapped());
        CHECK(m.id.group == c.id.group);
    }
}

TEST_CASE("mu star is clamped into the unit interval") {
    std::mt19937_64 rng(42);
    for (int k = 0; k < 2000; ++k) {
        const ChannelParams p = sample_channel(rng, {{-10, 60}, {0.01, 60}, {-10, 60}});
        for (User i = 0; i < 2; ++i) {
            CHECK(mu_star(p, i) >= 0.0);
            CHECK(mu_star(p, i) <= 1.0);
        }
    }
}

TEST_CASE("ledger self-gap and symmetry") {
    const BoundSet c = converse_families(ChannelParams(100, 100, 10, 10, 100, 100), 257);
    const GapLedger self = ledger_from_families(c, c);
    CHECK(self.delta == 0.0);
    CHECK(self.d_r1 == 0.0);
    CHECK(self.d_3r2 == 0.0);

    std::mt19937_64 rng(43);
    for (int k = 0; k < 40; ++k) {
        const double snr = db_to_linear(10 + 50 * uniform01(rng));
        const ChannelParams p = from_symmetric({snr, 0.1 + 1.9 * uniform01(rng), 3 * uniform01(rng)});
        const GapLedger g = ledger_gap(p, 65);
        CHECK(std::abs(g.d_r1 - g.d_r2) <= 1e-9);
        CHECK(std::abs(g.d_3r1 - g.d_3r2) <= 1e-9);
        CHECK(g.delta >= 0.0);
        CHECK(g.delta_literal >= g.delta - 1e-12);
    }
}

TEST_CASE("case 1.1 ledger stays below three halves") {
    std::mt19937_64 rng(44);
    for (int k = 0; k < 50; ++k) {
        const ChannelParams p = sample_case11_channel(rng);
        const GapLedger g = ledger_gap(p);
        CHECK(g.case_id == CaseId{1, 1, false});
        CHECK(g.delta <= 1.5 + 0.05);
    }
}

TEST_CASE("ledger over-approximates the numeric gap") {
    GridSpec grid;
    grid.rho_steps = 17;
    grid.mu_steps = 9;
    grid.conv_rho_steps = 129;
    grid.frontier_samples = 256;
    const ChannelParams sym(100, 100, 10, 10, 100, 100);
    CHECK(ledger_gap(sym).delta >= numeric_gap(sym, grid).xi - 0.05);

    std::mt19937_64 rng(45);
    for (int k = 0; k < 20; ++k) {
        const ChannelParams p = sample_channel(rng, {});
        CHECK(ledger_gap(p, 129).delta >= numeric_gap(p, grid).xi - 0.05);
    }
}

TEST_CASE("numeric gap of the converse region against itself is zero") {
    const ChannelParams p(100, 100, 10, 10, 100, 100);
    const Region outer = converse_union(p, 65);
    CHECK(gap_xi(outer, outer).xi == 0.0);

    Theorem3Options o;
    o.samples = 3;
    o.self_gap = true;
    o.grid.conv_rho_steps = 65;
    const Theorem3Report r = verify_theorem3(o);
    CHECK(r.max_xi() <= 1e-12);
    CHECK(r.passed());
}

TEST_CASE("verification smoke run is reproducible") {
    Theorem3Options o;
    o.samples = 4;
    o.seed = 7;
    o.grid.rho_steps = 9;
    o.grid.mu_steps = 9;
    o.grid.conv_rho_steps = 65;
    const Theorem3Report a = verify_theorem3(o);
    o.grid.threads = 2;
    const Theorem3Report b = verify_theorem3(o);
    REQUIRE(a.checks.size() == 4);
    CHECK(a.passed());
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(a.checks[k].params == b.checks[k].params);
        CHECK(a.checks[k].xi == b.checks[k].xi);
    }
    CHECK_THROWS_AS(verify_theorem3({.samples = 0}), InputError);
}

TEST_CASE("sampler respects its ranges") {
    std::mt19937_64 rng(46);
    const SamplerRanges r{{10, 20}, {-5, 3}, {0, 1}};
    for (int k = 0; k < 1000; ++k) {
        const ChannelParams p = sample_channel(rng, r);
        CHECK(linear_to_db(p.snr1()) >= 10 - 1e-9);
        CHECK(linear_to_db(p.snr1()) <= 20 + 1e-9);
        CHECK(p.inr12() > 1.0);
        CHECK(linear_to_db(p.inr21()) <= 3 + 1e-9);
    }
    CHECK_THROWS_AS(sample_channel(rng, {{10, 20}, {-5, -1}, {0, 1}}), InputError);
}

TEST_CASE("axis ranges and the symmetric surface") {
    CHECK(AxisRange{0.2, 2.0, 0.05}.values().size() == 37);
    CHECK(AxisRange{0.2, 3.0, 0.1}.values().size() == 29);
    CHECK(AxisRange{1, 1, 1}.values() == std::vector<double>{1});
    CHECK_THROWS_AS((AxisRange{0, 1, 0}.values()), InputError);

    GridSpec grid;
    grid.rho_steps = 9;
    grid.mu_steps = 9;
    grid.conv_rho_steps = 65;
    const auto cells = sweep_alpha_beta(100, {0.0, 0.5, 0.5}, {1.0, 1.0, 1.0}, grid);
    REQUIRE(cells.size() == 2);
    CHECK_FALSE(cells[0].xi.has_value());
    REQUIRE(cells[1].xi.has_value());
    CHECK(*cells[1].xi >= 0.0);
}

}
