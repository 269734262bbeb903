#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "icnof/achievable.hpp"
#include "icnof/gap.hpp"

namespace icnof::cli {

enum class Command {
    Classify,
    RegionAchievable,
    RegionConverse,
    GapLedger,
    GapNumeric,
    VerifyTheorem3,
    Sweep,
    FmCheck,
};

struct RunConfig {
    Command command = Command::Classify;

    std::optional<std::string> params_path;
    std::optional<double> snr_db;
    std::optional<std::string> alpha;  // a number, or lo:hi:step for sweep
    std::optional<std::string> beta;

    GridSpec grid;
    double slack = 0.05;
    std::uint64_t seed = 42;
    std::size_t samples = 200;
    std::size_t adversarial = 20;
    std::size_t resolution = 64;
    std::size_t rate_grid = 64;
    std::string snr_range = "10:60";
    std::string inr_range = "10:60";
    std::string fb_range = "10:60";
    std::string format = "csv";

    std::optional<std::string> output;
};

/// Exit codes of the command-line contract.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInvalid = 2;

/// Validates the config, runs the command and writes its output to `out` or the output file.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and runs it.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace icnof::cli
