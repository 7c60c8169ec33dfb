#include "sigscope/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "sigscope/experiments.hpp"
#include "sigscope/parallel.hpp"
#include "sigscope/paths.hpp"
#include "sigscope/signatures.hpp"

namespace sigscope {

namespace {

struct CommonArgs {
    ExperimentConfig cfg;
    std::string out;
    std::string format = "json";
    std::string norm = "l2";
    std::string window;
    double t = 0.0;
    bool check = false;
};

void add_output_flags(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--out", args.out, "write output to FILE instead of stdout");
    cmd->add_option("--format", args.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
}

void add_experiment_flags(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--seed", args.cfg.seed, "master seed");
    cmd->add_option("--trials", args.cfg.trials, "Monte-Carlo trials");
    cmd->add_option("--depth", args.cfg.depth, "signature truncation depth");
    cmd->add_flag("--check", args.check, "evaluate hard checks; exit 2 on failure");
    add_output_flags(cmd, args);
}

void add_window_flag(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--window", args.window, "estimator window as a,b");
}

Window parse_window(const std::string& text) {
    if (text.empty()) return Window{0, 0};
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("--window expects two integers as a,b");
    try {
        const int lo = std::stoi(text.substr(0, comma));
        const int hi = std::stoi(text.substr(comma + 1));
        return Window{lo, hi};
    } catch (const std::exception&) {
        throw std::invalid_argument("--window expects two integers as a,b");
    }
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file: " + out);
    file << text;
}

std::string dump_report(const nlohmann::json& report) {
    return report.dump(2) + "\n";
}

std::string csv_cell(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// One row per (trial, level) for per-level reports, one row per trial
// otherwise; numeric trial fields become columns in key order.
std::string report_to_csv(const nlohmann::json& report) {
    std::ostringstream os;
    const auto& trials = report.at("trials");
    if (trials.empty()) return "";
    const auto& first = trials.front();
    if (first.contains("norm_sq")) {
        os << "trial,level,norm_sq\n";
        for (const auto& row : trials) {
            const auto& values = row.at("norm_sq");
            for (std::size_t n = 0; n < values.size(); ++n)
                os << row.at("trial").get<int>() << "," << n + 1 << ","
                   << csv_cell(values[n].get<double>()) << "\n";
        }
        return os.str();
    }
    std::vector<std::string> columns;
    for (auto it = first.begin(); it != first.end(); ++it) columns.push_back(it.key());
    for (std::size_t c = 0; c < columns.size(); ++c) os << (c ? "," : "") << columns[c];
    os << "\n";
    for (const auto& row : trials) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (c) os << ",";
            const auto& cell = row.at(columns[c]);
            if (cell.is_number_float())
                os << csv_cell(cell.get<double>());
            else
                os << cell.dump();
        }
        os << "\n";
    }
    return os.str();
}

int finish_experiment(const nlohmann::json& report, const CommonArgs& args) {
    emit(args.format == "csv" ? report_to_csv(report) : dump_report(report), args.out);
    if (args.check && !hard_checks_pass(report)) return 2;
    return 0;
}

}

int cli_main(int argc, char** argv) {
    CLI::App app{"truncated signatures of sampled stochastic paths and the limits they recover"};
    app.require_subcommand(1);

    // simulate
    CommonArgs sim;
    int sim_dim = 1, sim_steps = 100;
    std::optional<double> sim_hurst;
    auto* simulate = app.add_subcommand("simulate", "sample a Brownian or fractional Brownian path");
    simulate->add_option("--dim", sim_dim, "path dimension");
    simulate->add_option("--steps", sim_steps, "number of grid steps");
    simulate->add_option("--t", sim.t, "time horizon");
    simulate->add_option("--seed", sim.cfg.seed, "seed");
    simulate->add_option("--hurst", sim_hurst, "sample fBM with this Hurst parameter");
    add_output_flags(simulate, sim);

    // signature
    CommonArgs sig_args;
    int sig_dim = 1, sig_steps = 100, sig_depth = 4;
    std::string sig_flavor = "geometric";
    std::optional<double> sig_hurst;
    auto* signature = app.add_subcommand("signature", "signature of one simulated path");
    signature->add_option("--dim", sig_dim, "path dimension");
    signature->add_option("--steps", sig_steps, "number of grid steps");
    signature->add_option("--t", sig_args.t, "time horizon");
    signature->add_option("--seed", sig_args.cfg.seed, "seed");
    signature->add_option("--depth", sig_depth, "truncation depth");
    signature->add_option("--hurst", sig_hurst, "sample fBM with this Hurst parameter");
    signature->add_option("--flavor", sig_flavor, "signature flavor")
        ->check(CLI::IsMember({"geometric", "ito"}));
    add_output_flags(signature, sig_args);

    // estimate-qv
    CommonArgs qv_args;
    auto* estimate_qv_cmd =
        app.add_subcommand("estimate-qv", "recover quadratic variation from closed-form signatures");
    estimate_qv_cmd->add_option("--t", qv_args.t, "horizon; equals the quadratic variation here");
    add_window_flag(estimate_qv_cmd, qv_args);
    add_experiment_flags(estimate_qv_cmd, qv_args);

    // estimate-hurst
    CommonArgs hurst_args;
    auto* estimate_hurst_cmd =
        app.add_subcommand("estimate-hurst", "recover the Hurst parameter from fWIS signatures");
    estimate_hurst_cmd->add_option("--hurst", hurst_args.cfg.hurst, "true Hurst parameter");
    estimate_hurst_cmd->add_option("--t", hurst_args.t, "time horizon (> 1)");
    add_window_flag(estimate_hurst_cmd, hurst_args);
    add_experiment_flags(estimate_hurst_cmd, hurst_args);

    // moment-identity
    CommonArgs moment_args;
    int moment_dim = 2;
    auto* moment_cmd =
        app.add_subcommand("moment-identity", "mean squared signature norms of BM per level");
    moment_cmd->add_option("--dim", moment_dim, "path dimension");
    moment_cmd->add_option("--steps", moment_args.cfg.steps, "grid steps per path");
    moment_cmd->add_option("--t", moment_args.t, "time horizon");
    moment_cmd->add_option("--norm", moment_args.norm, "tensor norm")
        ->check(CLI::IsMember({"l1", "l2"}));
    add_experiment_flags(moment_cmd, moment_args);

    // conjecture
    CommonArgs conj_args;
    auto* conjecture_cmd =
        app.add_subcommand("conjecture", "windowed L of geometric signatures of VB against the "
                                         "dimension-constant scaling");
    conjecture_cmd->add_option("--steps", conj_args.cfg.steps, "grid steps per path");
    conjecture_cmd->add_option("--t", conj_args.t, "time horizon");
    add_window_flag(conjecture_cmd, conj_args);
    add_experiment_flags(conjecture_cmd, conj_args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    configure_threads();
    try {
        if (simulate->parsed()) {
            const double horizon = sim.t > 0 ? sim.t : 1.0;
            const SamplePath path =
                sim_hurst ? simulate_fbm({*sim_hurst, horizon, sim_steps, sim_dim}, sim.cfg.seed)
                          : simulate_bm(sim_dim, horizon, sim_steps, sim.cfg.seed);
            if (sim.format == "csv") {
                std::ostringstream os;
                write_csv(path, os);
                emit(os.str(), sim.out);
            } else {
                nlohmann::json values = nlohmann::json::array();
                for (std::size_t row = 0; row < path.points(); ++row) {
                    nlohmann::json point = nlohmann::json::array();
                    for (int c = 0; c < path.dim; ++c) point.push_back(path.value(row, c));
                    values.push_back(std::move(point));
                }
                emit(dump_report({{"schema_version", 1},
                                  {"config",
                                   {{"experiment", "simulate"},
                                    {"dim", sim_dim},
                                    {"steps", sim_steps},
                                    {"t", horizon},
                                    {"seed", sim.cfg.seed},
                                    {"generator", path.generator}}},
                                  {"path", {{"times", path.times}, {"values", values}}}}),
                     sim.out);
            }
            return 0;
        }
        if (signature->parsed()) {
            const double horizon = sig_args.t > 0 ? sig_args.t : 1.0;
            const SamplePath path =
                sig_hurst ? simulate_fbm({*sig_hurst, horizon, sig_steps, sig_dim}, sig_args.cfg.seed)
                          : simulate_bm(sig_dim, horizon, sig_steps, sig_args.cfg.seed);
            const SignatureResult result = sig_flavor == "ito"
                                               ? ito_discrete_signature(path, sig_depth)
                                               : geometric_signature(path, sig_depth);
            nlohmann::json doc = signature_to_json(result);
            doc["config"] = {{"experiment", "signature"}, {"dim", sig_dim},   {"steps", sig_steps},
                             {"t", horizon},              {"seed", sig_args.cfg.seed}};
            if (sig_args.format == "csv") {
                std::ostringstream os;
                os << "level,index,value\n";
                for (int n = 0; n <= result.series.depth(); ++n)
                    for (std::size_t i = 0; i < result.series.level_size(n); ++i)
                        os << n << "," << i << "," << csv_cell(result.series.level(n)[i]) << "\n";
                emit(os.str(), sig_args.out);
            } else {
                emit(dump_report(doc), sig_args.out);
            }
            return 0;
        }
        if (estimate_qv_cmd->parsed()) {
            qv_args.cfg.horizon = qv_args.t;
            qv_args.cfg.window = parse_window(qv_args.window);
            return finish_experiment(run_qv_recovery(qv_args.cfg), qv_args);
        }
        if (estimate_hurst_cmd->parsed()) {
            hurst_args.cfg.horizon = hurst_args.t;
            hurst_args.cfg.window = parse_window(hurst_args.window);
            return finish_experiment(run_hurst_recovery(hurst_args.cfg), hurst_args);
        }
        if (moment_cmd->parsed()) {
            moment_args.cfg.dim = moment_dim;
            moment_args.cfg.horizon = moment_args.t;
            moment_args.cfg.norm = moment_args.norm == "l1" ? NormKind::L1 : NormKind::L2;
            return finish_experiment(run_moment_identity(moment_args.cfg), moment_args);
        }
        conj_args.cfg.dim = 2;
        conj_args.cfg.horizon = conj_args.t;
        conj_args.cfg.window = parse_window(conj_args.window);
        return finish_experiment(run_conjecture(conj_args.cfg), conj_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

int cli_main(const std::vector<std::string>& args) {
    std::vector<std::string> storage;
    storage.reserve(args.size() + 1);
    storage.push_back("sigscope");
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    argv.reserve(storage.size());
    for (std::string& s : storage) argv.push_back(s.data());
    return cli_main(static_cast<int>(argv.size()), argv.data());
}

}
