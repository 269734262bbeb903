#include <doctest.h>

#include <random>

#include "icnof/errors.hpp"
#include "icnof/fm_oracle.hpp"
#include "icnof/gap.hpp"

using namespace icnof;

TEST_SUITE("fm_oracle") {

TEST_CASE("theta mapping") {
    const ChannelParams p(100, 100, 10, 10, 100, 100);
    const ThetaVector t = theta_from_scheme(p, {0, 0, 0});
    const AchievableTerms a = a_terms(p, {0, 0, 0});
    for (User i = 0; i < 2; ++i) {
        CHECK(t(1, i) == 0.0);
        CHECK(t(2, i) == a.a2[i]);
        CHECK(t(3, i) == a.a4[i]);
        CHECK(t(4, i) == doctest::Approx(1.29248125036058).epsilon(1e-12));
        CHECK(t(5, i) == a.a5[i]);
        CHECK(t(6, i) == a.a6[i]);
        CHECK(t(7, i) == a.a7[i]);
    }
    const ThetaVector u = theta_from_scheme(p, {0.5, 0.3, 0.9});
    CHECK(u(4, 0) == t(4, 0));
    CHECK(u(4, 1) == t(4, 1));
}

TEST_CASE("projection of uniform systems") {
    const BoundSet m = fm_bounds(ThetaVector::uniform(1.5));
    CHECK(m.c_r1 == 1.5);
    CHECK(m.c_r2 == 1.5);
    const BoundSet z = fm_bounds(ThetaVector::uniform(0.0));
    for (std::size_t f = 0; f < 5; ++f) CHECK(z[f] == 0.0);
}

TEST_CASE("split feasibility examples") {
    std::mt19937_64 rng(51);
    const ThetaVector t = random_scheme_theta(rng);
    CHECK(split_feasible(t, {0, 0}));
    CHECK_FALSE(split_feasible(ThetaVector::uniform(0.0), {0.1, 0}));
    const auto s = find_split(ThetaVector::uniform(1.0), {0.5, 0.25});
    REQUIRE(s.has_value());
    CHECK(split_slack(ThetaVector::uniform(1.0), {0.5, 0.25}, *s) >= 0.0);
}

TEST_CASE("projection equals the achievable bounds for realized theta") {
    std::mt19937_64 rng(52);
    for (int k = 0; k < 1000; ++k) {
        const ChannelParams p = sample_channel(rng, {});
        const CodingScheme s{rho_max(p) * uniform01(rng), uniform01(rng), uniform01(rng)};
        const BoundSet fm = fm_bounds(theta_from_scheme(p, s));
        const BoundSet t1 = theorem1_bounds(p, s);
        for (std::size_t f = 0; f < 5; ++f) CHECK(std::abs(fm[f] - t1[f]) <= 1e-12);
    }
}

TEST_CASE("projection is monotone in theta") {
    std::mt19937_64 rng(53);
    for (int k = 0; k < 300; ++k) {
        ThetaVector t = random_scheme_theta(rng);
        const BoundSet before = fm_bounds(t);
        const int l = 1 + static_cast<int>(uniform01(rng) * 7);
        const User i = uniform01(rng) < 0.5 ? 0 : 1;
        t(l, i) += 0.5 * uniform01(rng);
        const BoundSet after = fm_bounds(t);
        for (std::size_t f = 0; f < 5; ++f) CHECK(after[f] >= before[f]);
    }
}

TEST_CASE("equivalence on uniform, realized and adversarial theta") {
    CHECK(equivalence_check(ThetaVector::uniform(1.0)).passed());
    std::mt19937_64 rng(54);
    for (int k = 0; k < 10; ++k) {
        const EquivalenceReport r = equivalence_check(random_scheme_theta(rng), 32, 64);
        CHECK(r.passed());
        CHECK(r.feasible > 0);
        const EquivalenceReport a = equivalence_check(adversarial_theta(rng), 32, 64);
        CHECK(a.passed());
    }
}

TEST_CASE("a wrong projection is detected") {
    std::mt19937_64 rng(55);
    const ThetaVector t = random_scheme_theta(rng);
    ThetaVector loose = t;
    for (int l = 1; l <= 7; ++l) {
        loose(l, 0) *= 1.5;
        loose(l, 1) *= 1.5;
    }
    bool any_difference = false;
    const BoundSet fb = fm_bounds(t);
    for (int a = 0; a < 32 && !any_difference; ++a) {
        for (int b = 0; b < 32; ++b) {
            const RatePair p{fb.c_r1 * 1.3 * a / 31.0, fb.c_r2 * 1.3 * b / 31.0};
            if (split_feasible(loose, p) && fb.min_slack(p) < -1e-9) {
                any_difference = true;
                break;
            }
        }
    }
    CHECK(any_difference);

    EquivalenceReport bad;
    bad.violations.push_back({{1, 1}, "soundness", -0.5});
    CHECK_THROWS_AS(require_pass(bad), EquivalenceFailure);
}

TEST_CASE("batch check is deterministic") {
    const FmCheckSummary a = fm_check(9, 4, 2, 32, 16);
    const FmCheckSummary b = fm_check(9, 4, 2, 32, 16, 2);
    CHECK(a.passed());
    CHECK(a.points == 6 * 16 * 16);
    CHECK(a.points == b.points);
}

}
