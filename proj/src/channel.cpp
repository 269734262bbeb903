#include "icnof/channel.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <sstream>

#include "icnof/errors.hpp"

namespace icnof {

namespace {

std::string describe(const char* name, double value) {
    std::ostringstream os;
    os << name << " = " << value;
    return os.str();
}

}  // namespace

ChannelParams::ChannelParams(double snr_fwd_1, double snr_fwd_2, double inr_12, double inr_21,
                             double snr_fb_1, double snr_fb_2)
    : snr_{snr_fwd_1, snr_fwd_2}, inr_{inr_12, inr_21}, fb_{snr_fb_1, snr_fb_2} {
    const char* snr_names[] = {"snr1", "snr2"};
    const char* inr_names[] = {"inr12", "inr21"};
    const char* fb_names[] = {"snr_fb1", "snr_fb2"};
    for (User i = 0; i < 2; ++i) {
        if (!std::isfinite(snr_[i]) || !(snr_[i] > 0.0))
            throw DomainError(describe(snr_names[i], snr_[i]) + ": forward SNR must be finite and > 0");
        if (!std::isfinite(fb_[i]) || !(fb_[i] >= 0.0))
            throw DomainError(describe(fb_names[i], fb_[i]) + ": feedback SNR must be finite and >= 0");
        if (!std::isfinite(inr_[i]))
            throw DomainError(describe(inr_names[i], inr_[i]) + ": INR must be finite");
        if (!(inr_[i] > 1.0))
            throw InterferenceTooWeak(describe(inr_names[i], inr_[i]) + ": INR must exceed 1");
    }
}

ChannelParams ChannelParams::swapped() const {
    return ChannelParams(snr_[1], snr_[0], inr_[1], inr_[0], fb_[1], fb_[0]);
}

ChannelParams derive_params(const CoefficientSet& c) {
    const double gains[] = {c.h_fwd_11, c.h_fwd_22, c.h_12, c.h_21, c.h_fb_11, c.h_fb_22};
    for (double g : gains) {
        if (!std::isfinite(g) || g < 0.0)
            throw DomainError("channel coefficients must be finite and nonnegative");
    }
    auto sq = [](double x) { return x * x; };
    const double fb1 = sq(c.h_fb_11) * (sq(c.h_fwd_11) + 2.0 * c.h_fwd_11 * c.h_12 + sq(c.h_12) + 1.0);
    const double fb2 = sq(c.h_fb_22) * (sq(c.h_fwd_22) + 2.0 * c.h_fwd_22 * c.h_21 + sq(c.h_21) + 1.0);
    return ChannelParams(sq(c.h_fwd_11), sq(c.h_fwd_22), sq(c.h_12), sq(c.h_21), fb1, fb2);
}

Scenario classify_one(const ChannelParams& p, User i) {
    const User j = other(i);
    const double snr_j = p.snr(j);
    const double inr_ij = p.inr(i);
    const double inr_ji = p.inr(j);
    // Strict / non-strict placement follows the event definitions exactly.
    if (snr_j < std::min(inr_ij, inr_ji)) return Scenario::S1;
    if (inr_ji <= snr_j && snr_j < inr_ij) return Scenario::S2;
    if (inr_ij <= snr_j && snr_j < inr_ji) return Scenario::S3;
    if (std::max(inr_ij, inr_ji) <= snr_j && snr_j < inr_ij * inr_ji) return Scenario::S4;
    assert(snr_j >= inr_ij * inr_ji);
    return Scenario::S5;
}

ScenarioPair classify(const ChannelParams& params) {
    return {classify_one(params, 0), classify_one(params, 1)};
}

std::string to_string(Scenario s) { return "S" + std::to_string(static_cast<int>(s)); }

std::string to_string(const ScenarioPair& pair) {
    return "(" + to_string(pair.s1) + ", " + to_string(pair.s2) + ")";
}

ChannelParams from_symmetric(const SymmetricSpec& spec) {
    if (!std::isfinite(spec.snr) || !(spec.snr > 1.0))
        throw DomainError(describe("snr", spec.snr) + ": symmetric SNR must exceed 1");
    if (!std::isfinite(spec.alpha) || !std::isfinite(spec.beta))
        throw DomainError("alpha and beta must be finite");
    const double inr = std::pow(spec.snr, spec.alpha);
    const double fb = std::pow(spec.snr, spec.beta);
    if (!(inr > 1.0))
        throw InterferenceTooWeak(describe("alpha", spec.alpha) + ": INR = SNR^alpha must exceed 1");
    return ChannelParams(spec.snr, spec.snr, inr, inr, fb, fb);
}

double db_to_linear(double db) noexcept { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) noexcept { return 10.0 * std::log10(linear); }

}  // namespace icnof
