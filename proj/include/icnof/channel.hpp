#pragma once

#include <array>
#include <string>

namespace icnof {

/// Transmitter-receiver pair index, 0 for pair 1 and 1 for pair 2.
using User = int;

constexpr User other(User i) noexcept { return 1 - i; }

/// Physical channel gains. All amplitudes, all nonnegative.
struct CoefficientSet {
    double h_fwd_11 = 0.0;
    double h_fwd_22 = 0.0;
    double h_12 = 0.0;  // transmitter 2 -> receiver 1
    double h_21 = 0.0;  // transmitter 1 -> receiver 2
    double h_fb_11 = 0.0;
    double h_fb_22 = 0.0;
};

/**
 * The six linear-scale parameters that fully describe a channel.
 *
 * `inr(i)` is the interference-to-noise ratio seen at receiver i, i.e.
 * INR_ij with j the other pair. The constructor enforces INR > 1 on both
 * cross links, SNR > 0 on the direct links and feedback SNR >= 0.
 */
class ChannelParams {
public:
    ChannelParams(double snr_fwd_1, double snr_fwd_2, double inr_12, double inr_21,
                  double snr_fb_1, double snr_fb_2);

    double snr(User i) const noexcept { return snr_[i]; }
    double inr(User i) const noexcept { return inr_[i]; }
    double fb(User i) const noexcept { return fb_[i]; }

    double snr1() const noexcept { return snr_[0]; }
    double snr2() const noexcept { return snr_[1]; }
    double inr12() const noexcept { return inr_[0]; }
    double inr21() const noexcept { return inr_[1]; }
    double snr_fb1() const noexcept { return fb_[0]; }
    double snr_fb2() const noexcept { return fb_[1]; }

    /// Same channel with the pair labels exchanged.
    ChannelParams swapped() const;

    bool operator==(const ChannelParams&) const = default;

private:
    std::array<double, 2> snr_;
    std::array<double, 2> inr_;
    std::array<double, 2> fb_;
};

ChannelParams derive_params(const CoefficientSet& coeffs);

enum class Scenario { S1 = 1, S2, S3, S4, S5 };

struct ScenarioPair {
    Scenario s1;
    Scenario s2;

    Scenario operator[](User i) const noexcept { return i == 0 ? s1 : s2; }
    bool operator==(const ScenarioPair&) const = default;
};

/// Interference scenario of pair i: compares SNR_j against INR_ij, INR_ji.
Scenario classify_one(const ChannelParams& params, User i);
ScenarioPair classify(const ChannelParams& params);

std::string to_string(Scenario s);
std::string to_string(const ScenarioPair& pair);

/// True for S3 and S4, the scenarios that switch the kappa6/kappa7 branches.
constexpr bool weak_cross_scenario(Scenario s) noexcept {
    return s == Scenario::S3 || s == Scenario::S4;
}

/// Symmetric channel given by SNR and the exponent ratios alpha (INR) and beta (feedback SNR).
struct SymmetricSpec {
    double snr = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
};

ChannelParams from_symmetric(const SymmetricSpec& spec);

double db_to_linear(double db) noexcept;
double linear_to_db(double linear) noexcept;

}  // namespace icnof
