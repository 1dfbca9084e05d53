#include "distilled/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "distilled/config.hpp"
#include "distilled/csv.hpp"
#include "distilled/error.hpp"
#include "distilled/harness.hpp"
#include "distilled/parallel.hpp"

namespace distilled {

namespace {

struct ConfigKey {
    const char* name;
    const char* help;
};

const ConfigKey kConfigKeys[] = {
    {"p", "signal dimension"},
    {"beta", "sparsity exponent, s = p^(1-beta)"},
    {"num_nonzero", "support size (overrides beta)"},
    {"snr", "mu^2 per nonzero coordinate"},
    {"trials", "Monte Carlo replicates"},
    {"decay", "geometric budget decay in (0.5, 1]"},
    {"master_seed", "master seed"},
    {"method", "ds, nonadaptive or both"},
    {"target_fdr", "FDR target for calibration"},
    {"threshold_grid", "comma-separated thresholds (default: per-trial log grid)"},
};

/// Experiment flags, stored as text and applied through the config-file
/// vocabulary so both routes share one parser.
struct ExperimentFlags {
    std::string config_path;
    std::map<std::string, std::string> values;
    std::map<std::string, CLI::Option*> options;
    unsigned workers = 0;
    std::string out;

    void attach(CLI::App& cmd)
    {
        cmd.add_option("--config", config_path, "flat key = value config file")->check(CLI::ExistingFile);
        for (const auto& [key, help] : kConfigKeys) {
            std::string names = std::string("--") + key;
            if (std::string_view(key) == "master_seed")
                names += ",--seed";
            options[key] = cmd.add_option(names, values[key], help);
        }
        cmd.add_option("--workers", workers, "trial worker threads (0: all cores)");
        cmd.add_option("--out", out, "output CSV path")->required();
    }

    ExperimentConfig resolve(ExperimentConfig base) const
    {
        if (!config_path.empty())
            base = load_config(config_path, std::move(base));
        for (const auto& [key, option] : options)
            if (option->count() > 0)
                apply_config_entry(base, key, values.at(key));
        base.workers = workers;
        base.validate();
        return base;
    }
};

std::vector<double> parse_list(const std::string& name, const std::string& text)
{
    ExperimentConfig scratch;
    try {
        apply_config_entry(scratch, "threshold_grid", text.empty() ? std::string("x") : text);
    } catch (const ParameterError&) {
        throw ParameterError("invalid list for --" + name + ": '" + text + "'");
    }
    return scratch.threshold_grid;
}

std::ofstream open_output(const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw ParameterError("cannot open output file '" + path + "'");
    return out;
}

void write_sidecar(const std::string& out_path, const std::string& subcommand, const std::string& body,
                   const std::string& extra)
{
    auto meta = open_output(out_path + ".meta");
    meta << "# tool = dsense " << kToolVersion << '\n';
    meta << "# subcommand = " << subcommand << '\n';
    if (!extra.empty())
        meta << extra;
    meta << "# rerun: dsense " << subcommand;
    if (!body.empty())
        meta << " --config " << out_path << ".meta";
    std::istringstream lines(extra);
    for (std::string line; std::getline(lines, line);) {
        const auto eq = line.find(" = ");
        meta << " --" << line.substr(2, eq - 2) << ' ' << line.substr(eq + 3);
    }
    meta << " --out " << out_path << '\n';
    meta << body;
}

std::string comment_line(const std::string& key, const std::string& value)
{
    return "# " + key + " = " + value + '\n';
}

} // namespace

int run_cli(int argc, const char* const* argv)
{
    CLI::App app{"Distilled sensing experiments", "dsense"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    std::function<int()> action;

    // simulate
    ExperimentFlags simulate_flags;
    auto* simulate = app.add_subcommand("simulate", "per-trial metrics at the default thresholds");
    simulate_flags.attach(*simulate);
    simulate->callback([&] {
        action = [&] {
            const auto config = simulate_flags.resolve({});
            const auto trials = parallel_map(static_cast<std::size_t>(config.trials), config.workers,
                                             [&](std::size_t t) {
                                                 auto outcome = run_trial(config, static_cast<Index>(t));
                                                 outcome.trace.reset();
                                                 outcome.nonadaptive.reset();
                                                 for (auto& m : outcome.methods)
                                                     m.curve = {};
                                                 return outcome;
                                             });
            auto out = open_output(simulate_flags.out);
            write_trials_csv(out, trials);
            write_sidecar(simulate_flags.out, "simulate", render_config(config), "");
            return 0;
        };
    });

    // sweep
    ExperimentFlags sweep_flags;
    auto* sweep = app.add_subcommand("sweep", "FDP/NDP over a threshold grid for every trial");
    sweep_flags.attach(*sweep);
    sweep->callback([&] {
        action = [&] {
            const auto config = sweep_flags.resolve({});
            const auto result = sweep_thresholds(config);
            auto out = open_output(sweep_flags.out);
            write_sweep_csv(out, result);
            write_sidecar(sweep_flags.out, "sweep", render_config(config), "");
            return 0;
        };
    });

    // calibrate
    ExperimentFlags calibrate_flags;
    Index calibrate_pilots = 500;
    auto* calibrate = app.add_subcommand("calibrate", "threshold giving the target FDR on pilot trials");
    calibrate_flags.attach(*calibrate);
    calibrate->add_option("--pilot_trials", calibrate_pilots, "pilot replicates")->check(CLI::PositiveNumber);
    calibrate->callback([&] {
        action = [&] {
            const auto config = calibrate_flags.resolve({});
            const double target = config.target_fdr.value_or(0.05);
            std::vector<CalibrationRow> rows;
            for (Method method : config.methods())
                rows.push_back({method, config.p, config.snr, target,
                                calibrate_threshold_for_fdr(config, method, target, calibrate_pilots)});
            auto out = open_output(calibrate_flags.out);
            write_calibration_csv(out, rows);
            write_sidecar(calibrate_flags.out, "calibrate", render_config(config),
                          comment_line("pilot_trials", std::to_string(calibrate_pilots)));
            return 0;
        };
    });

    // snr-sweep
    ExperimentFlags snr_flags;
    std::string snr_list_text;
    std::string p_list_text;
    Index snr_pilots = 500;
    auto* snr = app.add_subcommand("snr-sweep", "FDR-calibrated NDR across SNR values");
    snr_flags.attach(*snr);
    snr->add_option("--snr_list", snr_list_text, "comma-separated SNR values")->required();
    snr->add_option("--p_list", p_list_text, "comma-separated dimensions (default: --p)");
    snr->add_option("--pilot_trials", snr_pilots, "pilot replicates per calibration")->check(CLI::PositiveNumber);
    snr->callback([&] {
        action = [&] {
            ExperimentConfig base;
            base.trials = 500;
            const auto config = snr_flags.resolve(base);
            const auto snrs = parse_list("snr_list", snr_list_text);
            std::vector<Index> dims{config.p};
            if (!p_list_text.empty()) {
                dims.clear();
                for (double v : parse_list("p_list", p_list_text))
                    dims.push_back(static_cast<Index>(v));
            }
            std::vector<SnrRow> rows;
            for (Index p : dims) {
                ExperimentConfig cfg = config;
                cfg.p = p;
                cfg.validate();
                const auto part = snr_sweep(cfg, snrs, config.target_fdr.value_or(0.05), snr_pilots);
                rows.insert(rows.end(), part.begin(), part.end());
            }
            auto out = open_output(snr_flags.out);
            write_snr_csv(out, rows);
            std::string extra = comment_line("snr_list", snr_list_text) +
                                comment_line("pilot_trials", std::to_string(snr_pilots));
            if (!p_list_text.empty())
                extra += comment_line("p_list", p_list_text);
            write_sidecar(snr_flags.out, "snr-sweep", render_config(config), extra);
            return 0;
        };
    });

    // phase-transition
    PhaseConfig phase;
    std::string r_list_text;
    std::string phase_out;
    auto* phase_cmd = app.add_subcommand("phase-transition", "thresholding accuracy across r around beta");
    phase_cmd->add_option("--p", phase.p, "signal dimension");
    phase_cmd->add_option("--beta", phase.beta, "sparsity exponent");
    phase_cmd->add_option("--r_list", r_list_text, "comma-separated amplitude exponents")->required();
    phase_cmd->add_option("--trials", phase.trials, "replicates per r");
    phase_cmd->add_option("--master_seed,--seed", phase.master_seed, "master seed");
    phase_cmd->add_option("--tolerance", phase.tolerance, "max(FDP, NDP) success level");
    phase_cmd->add_option("--workers", phase.workers, "trial worker threads (0: all cores)");
    phase_cmd->add_option("--out", phase_out, "output CSV path")->required();
    phase_cmd->callback([&] {
        action = [&] {
            phase.r_list = parse_list("r_list", r_list_text);
            const auto rows = validate_phase_transition(phase);
            auto out = open_output(phase_out);
            write_phase_csv(out, rows);
            std::ostringstream extra;
            extra << comment_line("p", std::to_string(phase.p)) << comment_line("beta", format_real(phase.beta))
                  << comment_line("r_list", r_list_text) << comment_line("trials", std::to_string(phase.trials))
                  << comment_line("master_seed", std::to_string(phase.master_seed))
                  << comment_line("tolerance", format_real(phase.tolerance));
            write_sidecar(phase_out, "phase-transition", "", extra.str());
            return 0;
        };
    });

    // boundary
    int boundary_points = 999;
    std::string boundary_out;
    auto* boundary = app.add_subcommand("boundary", "detection boundary rho(beta) on a grid");
    boundary->add_option("--points", boundary_points, "interior grid points of (0, 1)")->check(CLI::Range(2, 10000000));
    boundary->add_option("--out", boundary_out, "output CSV path")->required();
    boundary->callback([&] {
        action = [&] {
            auto out = open_output(boundary_out);
            write_boundary_csv(out, boundary_points);
            write_sidecar(boundary_out, "boundary", "", comment_line("points", std::to_string(boundary_points)));
            return 0;
        };
    });

    // validate-lemmas
    LemmaSuiteConfig lemmas;
    std::string lemma_out;
    auto* lemma_cmd = app.add_subcommand("validate-lemmas", "Monte Carlo and exact checks of every bound");
    lemma_cmd->add_option("--master_seed,--seed", lemmas.master_seed, "master seed");
    lemma_cmd->add_option("--null_replicates", lemmas.null_replicates)->check(CLI::PositiveNumber);
    lemma_cmd->add_option("--signal_replicates", lemmas.signal_replicates)->check(CLI::PositiveNumber);
    lemma_cmd->add_option("--envelope_runs", lemmas.envelope_runs)->check(CLI::PositiveNumber);
    lemma_cmd->add_option("--workers", lemmas.workers, "worker threads (0: all cores)");
    lemma_cmd->add_option("--out", lemma_out, "output CSV path (default: standard output)");
    lemma_cmd->callback([&] {
        action = [&] {
            const auto checks = validate_lemmas(lemmas);
            bool all = true;
            for (const auto& c : checks)
                all = all && c.pass;
            if (lemma_out.empty()) {
                write_lemma_csv(std::cout, checks);
            } else {
                auto out = open_output(lemma_out);
                write_lemma_csv(out, checks);
                std::ostringstream extra;
                extra << comment_line("master_seed", std::to_string(lemmas.master_seed))
                      << comment_line("null_replicates", std::to_string(lemmas.null_replicates))
                      << comment_line("signal_replicates", std::to_string(lemmas.signal_replicates))
                      << comment_line("envelope_runs", std::to_string(lemmas.envelope_runs));
                write_sidecar(lemma_out, "validate-lemmas", "", extra.str());
            }
            for (const auto& c : checks)
                if (!c.pass)
                    std::cerr << "lemma check failed: " << c.lemma << " (" << c.params << ")\n";
            return all ? 0 : 1;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return action ? action() : 2;
    } catch (const ParameterError& e) {
        std::cerr << "dsense: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "dsense: internal error: " << e.what() << '\n';
        return 1;
    }
}

int run_cli(const std::vector<std::string>& args)
{
    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args)
        argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data());
}

} // namespace distilled
