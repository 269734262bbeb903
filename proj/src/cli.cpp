#include "icnof/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "icnof/converse.hpp"
#include "icnof/errors.hpp"
#include "icnof/fm_oracle.hpp"
#include "icnof/io.hpp"
#include "icnof/parallel.hpp"

namespace icnof::cli {

namespace {

double parse_number(const std::string& text, const std::string& field) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw InputError(field + ": \"" + text + "\" is not a number");
    }
    if (used != text.size() || !std::isfinite(v)) throw InputError(field + ": \"" + text + "\" is not a number");
    return v;
}

std::vector<double> split_numbers(const std::string& text, const std::string& field, std::size_t parts) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) out.push_back(parse_number(item, field));
    if (out.size() != parts) {
        std::string shape = parts == 2 ? "lo:hi" : "lo:hi:step";
        throw InputError(field + ": expected " + shape + ", got \"" + text + "\"");
    }
    return out;
}

DbRange parse_db_range(const std::string& text, const std::string& field) {
    const auto v = split_numbers(text, field, 2);
    if (!(v[0] <= v[1])) throw InputError(field + ": lower end exceeds upper end");
    return {v[0], v[1]};
}

AxisRange parse_axis(const std::optional<std::string>& text, const std::string& field) {
    if (!text) throw InputError(field + " is required as lo:hi:step");
    const auto v = split_numbers(*text, field, 3);
    AxisRange r{v[0], v[1], v[2]};
    if (!(r.step > 0.0)) throw InputError(field + ": step must be > 0");
    if (!(r.lo <= r.hi)) throw InputError(field + ": lower end exceeds upper end");
    return r;
}

ChannelParams resolve_channel(const RunConfig& c) {
    const bool symmetric = c.snr_db || c.alpha || c.beta;
    if (c.params_path && symmetric) throw InputError("--params cannot be combined with --snr-db/--alpha/--beta");
    if (c.params_path) return load_params(*c.params_path);
    if (!c.snr_db || !c.alpha || !c.beta) throw InputError("give --params FILE or all of --snr-db, --alpha, --beta");
    const double alpha = parse_number(*c.alpha, "--alpha");
    const double beta = parse_number(*c.beta, "--beta");
    return from_symmetric({db_to_linear(*c.snr_db), alpha, beta});
}

void validate_grid(const GridSpec& g) {
    if (g.rho_steps < 1) throw InputError("--rho-steps must be >= 1");
    if (g.mu_steps < 1) throw InputError("--mu-steps must be >= 1");
    if (g.conv_rho_steps < 1) throw InputError("--conv-rho-steps must be >= 1");
    if (g.frontier_samples < 3) throw InputError("--frontier-samples must be >= 3");
    if (!(g.tol > 0.0)) throw InputError("--tol must be > 0");
}

int emit(const RunConfig& c, const std::string& text, std::ostream& out, std::ostream& err) {
    if (!c.output) {
        out << text;
        return kExitPass;
    }
    std::ofstream file(*c.output, std::ios::binary);
    if (!file) {
        err << "error: cannot write \"" << *c.output << "\"\n";
        return kExitInvalid;
    }
    file << text;
    return kExitPass;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string frontier_text(const Region& region, const RunConfig& c) {
    std::ostringstream os;
    if (c.format == "json") {
        os << dump(to_json(region));
    } else {
        write_frontier_csv(os, frontier(region, c.grid.frontier_samples, c.grid.threads));
    }
    return os.str();
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    RunConfig c = config;
    if (c.grid.threads == 0) c.grid.threads = default_threads();
    try {
        validate_grid(c.grid);
        if (!(c.slack >= 0.0)) throw InputError("--slack must be >= 0");
        if (c.format != "csv" && c.format != "json") throw InputError("--format must be csv or json");

        switch (c.command) {
            case Command::Classify: {
                const ChannelParams p = resolve_channel(c);
                return emit(c, to_string(classify(p)) + "\n", out, err);
            }
            case Command::RegionAchievable: {
                const ChannelParams p = resolve_channel(c);
                return emit(c, frontier_text(achievable_union(p, c.grid), c), out, err);
            }
            case Command::RegionConverse: {
                const ChannelParams p = resolve_channel(c);
                return emit(c, frontier_text(converse_union(p, c.grid.conv_rho_steps, c.grid.threads), c), out,
                            err);
            }
            case Command::GapLedger: {
                const ChannelParams p = resolve_channel(c);
                json j = to_json(ledger_gap(p, c.grid.conv_rho_steps));
                j["params"] = to_json(p);
                return emit(c, dump(j), out, err);
            }
            case Command::GapNumeric: {
                const ChannelParams p = resolve_channel(c);
                json j = to_json(numeric_gap(p, c.grid));
                j["params"] = to_json(p);
                return emit(c, dump(j), out, err);
            }
            case Command::VerifyTheorem3: {
                Theorem3Options o;
                o.seed = c.seed;
                o.samples = c.samples;
                if (o.samples == 0) throw InputError("--samples must be >= 1");
                o.ranges = {parse_db_range(c.snr_range, "--snr-range"), parse_db_range(c.inr_range, "--inr-range"),
                            parse_db_range(c.fb_range, "--fb-range")};
                if (!(o.ranges.inr.hi > 0.0)) throw InputError("--inr-range never yields INR > 1");
                o.grid = c.grid;
                o.slack = c.slack;
                const Theorem3Report report = verify_theorem3(o);
                const int code = emit(c, dump(to_json(report)), out, err);
                if (code != kExitPass) return code;
                err << "max xi " << report.max_xi() << " bits, max delta " << report.max_delta() << " bits, "
                    << report.violations.size() << " violation(s)\n";
                return report.passed() ? kExitPass : kExitFailure;
            }
            case Command::Sweep: {
                if (c.params_path) throw InputError("sweep takes --snr-db, not --params");
                if (!c.snr_db) throw InputError("--snr-db is required");
                const AxisRange alphas = parse_axis(c.alpha, "--alpha");
                const AxisRange betas = parse_axis(c.beta, "--beta");
                const double snr = db_to_linear(*c.snr_db);
                if (!(snr > 1.0)) throw InputError("--snr-db must be > 0");
                const auto cells = sweep_alpha_beta(snr, alphas, betas, c.grid);
                std::ostringstream os;
                write_surface_csv(os, cells);
                return emit(c, os.str(), out, err);
            }
            case Command::FmCheck: {
                if (c.resolution < 8) throw InputError("--resolution must be >= 8");
                if (c.rate_grid < 16) throw InputError("--rate-grid must be >= 16");
                const FmCheckSummary s =
                    fm_check(c.seed, c.samples, c.adversarial, c.resolution, c.rate_grid, c.grid.threads);
                const int code = emit(c, dump(to_json(s)), out, err);
                if (code != kExitPass) return code;
                return s.passed() ? kExitPass : kExitFailure;
            }
        }
        return kExitInvalid;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const InterferenceTooWeak& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rate-region bounds for the two-user Gaussian interference channel with noisy feedback", "icnof"};
    app.require_subcommand(1);

    RunConfig c;
    std::optional<unsigned> threads;

    auto add_channel = [&](CLI::App* sub) {
        sub->add_option("--params", c.params_path, "JSON file with the six channel parameters");
        sub->add_option("--snr-db", c.snr_db, "symmetric forward SNR in dB");
        sub->add_option("--alpha", c.alpha, "log INR / log SNR");
        sub->add_option("--beta", c.beta, "log feedback SNR / log SNR");
    };
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--rho-steps", c.grid.rho_steps, "achievable rho grid points")->capture_default_str();
        sub->add_option("--mu-steps", c.grid.mu_steps, "achievable mu grid points")->capture_default_str();
        sub->add_option("--conv-rho-steps", c.grid.conv_rho_steps, "converse rho grid points")->capture_default_str();
        sub->add_option("--frontier-samples", c.grid.frontier_samples, "frontier samples per sweep")
            ->capture_default_str();
        sub->add_option("--tol", c.grid.tol, "gap tolerance in bits")->capture_default_str();
        sub->add_option("--threads", threads, "worker threads (0 = hardware)");
        sub->add_option("-o,--output", c.output, "output file (default: stdout)");
    };

    CLI::App* classify_cmd = app.add_subcommand("classify", "print the scenario pair");
    add_channel(classify_cmd);
    add_common(classify_cmd);

    CLI::App* region_cmd = app.add_subcommand("region", "frontier of one bound region");
    region_cmd->require_subcommand(1);
    CLI::App* region_ach = region_cmd->add_subcommand("achievable", "achievable (inner) region");
    CLI::App* region_conv = region_cmd->add_subcommand("converse", "converse (outer) region");
    for (CLI::App* sub : {region_ach, region_conv}) {
        add_channel(sub);
        add_common(sub);
        sub->add_option("--format", c.format, "csv frontier or json bound sets")->capture_default_str();
    }

    CLI::App* gap_cmd = app.add_subcommand("gap", "gap between the converse and achievable regions");
    gap_cmd->require_subcommand(1);
    CLI::App* gap_ledger = gap_cmd->add_subcommand("ledger", "per-family analytic gap");
    CLI::App* gap_numeric = gap_cmd->add_subcommand("numeric", "uniform-shift gap of the two regions");
    for (CLI::App* sub : {gap_ledger, gap_numeric}) {
        add_channel(sub);
        add_common(sub);
    }

    CLI::App* verify_cmd = app.add_subcommand("verify", "randomized verification sweeps");
    verify_cmd->require_subcommand(1);
    CLI::App* verify_t3 = verify_cmd->add_subcommand("theorem3", "constant-gap check on random channels");
    add_common(verify_t3);
    verify_t3->add_option("--samples", c.samples, "number of random channels")->capture_default_str();
    verify_t3->add_option("--seed", c.seed, "generator seed")->capture_default_str();
    verify_t3->add_option("--snr-range", c.snr_range, "forward SNR range in dB, lo:hi")->capture_default_str();
    verify_t3->add_option("--inr-range", c.inr_range, "INR range in dB, lo:hi")->capture_default_str();
    verify_t3->add_option("--fb-range", c.fb_range, "feedback SNR range in dB, lo:hi")->capture_default_str();
    verify_t3->add_option("--slack", c.slack, "tolerance on the gap bound in bits")->capture_default_str();

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "symmetric gap surface over alpha and beta");
    add_channel(sweep_cmd);
    add_common(sweep_cmd);

    CLI::App* fm_cmd = app.add_subcommand("fm-check", "verify the eliminated rate-split system");
    add_common(fm_cmd);
    fm_cmd->add_option("--samples", c.samples, "realized theta vectors")->default_val(100);
    fm_cmd->add_option("--adversarial", c.adversarial, "stressed theta vectors")->capture_default_str();
    fm_cmd->add_option("--seed", c.seed, "generator seed")->capture_default_str();
    fm_cmd->add_option("--resolution", c.resolution, "split grid points per dimension")->capture_default_str();
    fm_cmd->add_option("--rate-grid", c.rate_grid, "rate grid points per axis")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }

    if (*classify_cmd) c.command = Command::Classify;
    else if (*region_ach) c.command = Command::RegionAchievable;
    else if (*region_conv) c.command = Command::RegionConverse;
    else if (*gap_ledger) c.command = Command::GapLedger;
    else if (*gap_numeric) c.command = Command::GapNumeric;
    else if (*verify_t3) c.command = Command::VerifyTheorem3;
    else if (*sweep_cmd) c.command = Command::Sweep;
    else if (*fm_cmd) c.command = Command::FmCheck;

    if (threads) {
        c.grid.threads = *threads;
    } else if (const char* env = std::getenv("ICNOF_THREADS")) {
        try {
            const double t = parse_number(env, "ICNOF_THREADS");
            if (t < 0 || t != std::floor(t)) throw InputError("ICNOF_THREADS must be a nonnegative integer");
            c.grid.threads = static_cast<unsigned>(t);
        } catch (const InputError& e) {
            err << "error: " << e.what() << "\n";
            return kExitInvalid;
        }
    } else {
        c.grid.threads = 0;
    }
    return run(c, out, err);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"icnof"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace icnof::cli
