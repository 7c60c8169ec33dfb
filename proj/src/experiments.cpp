#include "sigscope/experiments.hpp"

#include <array>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "sigscope/hermite.hpp"
#include "sigscope/paths.hpp"
#include "sigscope/rng.hpp"
#include "sigscope/signatures.hpp"

namespace sigscope {

namespace {

int pick(int value, int fallback) { return value > 0 ? value : fallback; }
double pick(double value, double fallback) { return value > 0.0 ? value : fallback; }

struct Moments {
    double mean = 0.0;
    double stddev = 0.0;
    double stderr_mean = 0.0;
};

Moments moments(const std::vector<double>& xs) {
    Moments m;
    if (xs.empty()) return m;
    double acc = 0.0;
    for (const double x : xs) acc += x;
    m.mean = acc / static_cast<double>(xs.size());
    if (xs.size() < 2) return m;
    double sq = 0.0;
    for (const double x : xs) sq += (x - m.mean) * (x - m.mean);
    m.stddev = std::sqrt(sq / static_cast<double>(xs.size() - 1));
    m.stderr_mean = m.stddev / std::sqrt(static_cast<double>(xs.size()));
    return m;
}

nlohmann::json check_entry(const std::string& name, const std::string& kind,
                           const std::string& provenance, double target, double measured,
                           double tolerance) {
    return nlohmann::json{{"name", name},
                          {"kind", kind},
                          {"provenance", provenance},
                          {"target", target},
                          {"measured", measured},
                          {"tolerance", tolerance},
                          {"passed", std::abs(measured - target) <= tolerance}};
}

nlohmann::json interval_check(const std::string& name, const std::string& kind,
                              const std::string& provenance, double lo, double hi,
                              double measured) {
    return nlohmann::json{{"name", name},
                          {"kind", kind},
                          {"provenance", provenance},
                          {"interval", {lo, hi}},
                          {"measured", measured},
                          {"passed", measured >= lo && measured <= hi}};
}

nlohmann::json base_report(const nlohmann::json& config) {
    return nlohmann::json{{"schema_version", 1},
                          {"config", config},
                          {"trials", nlohmann::json::array()},
                          {"aggregates", nlohmann::json::object()},
                          {"checks", nlohmann::json::array()}};
}

}

nlohmann::json run_moment_identity(const ExperimentConfig& cfg) {
    if (cfg.norm != NormKind::L2)
        throw std::invalid_argument("moment identity: the target moment is an l2 statement");
    const int dim = pick(cfg.dim, 2);
    const int depth = pick(cfg.depth, 6);
    const int steps = pick(cfg.steps, 10000);
    const int trials = pick(cfg.trials, 1000);
    const double horizon = pick(cfg.horizon, 1.0);
    checked_top_block(dim, depth);

    std::vector<std::vector<double>> norm_sq(static_cast<std::size_t>(trials));
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < trials; ++i) {
        const SamplePath path = simulate_bm(dim, horizon, steps, trial_seed(cfg.seed, i));
        const SignatureResult sig = ito_discrete_signature(path, depth);
        std::vector<double>& row = norm_sq[static_cast<std::size_t>(i)];
        row.resize(static_cast<std::size_t>(depth));
        for (int n = 1; n <= depth; ++n) {
            const double v = level_norm(sig.series, n, NormKind::L2);
            row[static_cast<std::size_t>(n - 1)] = v * v;
        }
    }

    nlohmann::json report = base_report({{"experiment", "moment-identity"},
                                         {"dim", dim},
                                         {"depth", depth},
                                         {"steps", steps},
                                         {"trials", trials},
                                         {"seed", cfg.seed},
                                         {"norm", "l2"},
                                         {"t", horizon}});
    for (int i = 0; i < trials; ++i)
        report["trials"].push_back({{"trial", i},
                                    {"seed", trial_seed(cfg.seed, i)},
                                    {"norm_sq", norm_sq[static_cast<std::size_t>(i)]}});

    nlohmann::json levels = nlohmann::json::array();
    std::vector<double> column(static_cast<std::size_t>(trials));
    for (int n = 1; n <= depth; ++n) {
        for (int i = 0; i < trials; ++i)
            column[static_cast<std::size_t>(i)] = norm_sq[static_cast<std::size_t>(i)][static_cast<std::size_t>(n - 1)];
        const Moments m = moments(column);
        const double target = std::pow(static_cast<double>(dim) * horizon, n) / std::tgamma(n + 1.0);
        levels.push_back({{"level", n},
                          {"mean", m.mean},
                          {"stddev", m.stddev},
                          {"stderr", m.stderr_mean},
                          {"target", target}});
        report["checks"].push_back(check_entry("level " + std::to_string(n) +
                                                   " mean norm_sq within 3 stderr of target",
                                               "hard", "derived", target, m.mean,
                                               3.0 * m.stderr_mean));
    }
    report["aggregates"]["levels"] = std::move(levels);
    return report;
}

nlohmann::json run_qv_recovery(const ExperimentConfig& cfg) {
    const int depth = pick(cfg.depth, 200);
    const int trials = pick(cfg.trials, 1000);
    const double qv = pick(cfg.horizon, 1.0);
    const Window window = window_or_default(cfg.window, depth);
    validate_window(window, depth);

    std::vector<double> estimates(static_cast<std::size_t>(trials));
    std::vector<double> draws(static_cast<std::size_t>(trials));
    std::vector<char> excluded(static_cast<std::size_t>(trials), 0);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < trials; ++i) {
        auto engine = make_engine(trial_seed(cfg.seed, i));
        std::normal_distribution<double> gauss(0.0, std::sqrt(qv));
        const double x = gauss(engine);
        const SignatureResult sig = closed_form_ito_signature_1d(qv, x, depth);
        const LimitEstimate est = limit_functional(sig, window, NormKind::L2);
        draws[static_cast<std::size_t>(i)] = x;
        estimates[static_cast<std::size_t>(i)] = 2.0 * est.value;
        excluded[static_cast<std::size_t>(i)] = est.all_flagged ? 1 : 0;
    }

    nlohmann::json report = base_report({{"experiment", "estimate-qv"},
                                         {"dim", 1},
                                         {"depth", depth},
                                         {"trials", trials},
                                         {"seed", cfg.seed},
                                         {"norm", "l2"},
                                         {"qv", qv},
                                         {"window", {window.lo, window.hi}}});
    std::vector<double> kept;
    kept.reserve(static_cast<std::size_t>(trials));
    int excluded_count = 0;
    for (int i = 0; i < trials; ++i) {
        const bool out = excluded[static_cast<std::size_t>(i)] != 0;
        report["trials"].push_back({{"trial", i},
                                    {"seed", trial_seed(cfg.seed, i)},
                                    {"x_t", draws[static_cast<std::size_t>(i)]},
                                    {"estimate", estimates[static_cast<std::size_t>(i)]},
                                    {"excluded", out}});
        if (out)
            ++excluded_count;
        else
            kept.push_back(estimates[static_cast<std::size_t>(i)]);
    }
    const Moments m = moments(kept);
    const double excluded_fraction = static_cast<double>(excluded_count) / trials;
    report["aggregates"] = {{"mean", m.mean},
                            {"stddev", m.stddev},
                            {"stderr", m.stderr_mean},
                            {"excluded", excluded_count},
                            {"excluded_fraction", excluded_fraction},
                            {"kept", static_cast<int>(kept.size())}};
    report["checks"].push_back(
        check_entry("mean estimate within 2% of qv", "hard", "derived", qv, m.mean, 0.02 * qv));
    report["checks"].push_back(interval_check("degenerate draws below 1%", "hard", "derived", 0.0,
                                              0.01, excluded_fraction));
    return report;
}

nlohmann::json run_hurst_recovery(const ExperimentConfig& cfg) {
    const int depth = pick(cfg.depth, 200);
    const int trials = pick(cfg.trials, 1000);
    const double t = pick(cfg.horizon, 2.0);
    const double hurst = cfg.hurst;
    if (!(hurst >= 0.5 && hurst < 1.0))
        throw std::invalid_argument("hurst recovery: hurst must lie in [1/2,1)");
    if (t <= 1.0) throw std::invalid_argument("hurst recovery: requires t > 1");
    const Window window = window_or_default(cfg.window, depth);
    validate_window(window, depth);
    const StepFunction f = indicator(t);
    const double norm_sq_target = theta_norm_sq(f, hurst, t);  // t^{2H}
    const double sd = std::sqrt(norm_sq_target);

    std::vector<double> wieners(static_cast<std::size_t>(trials));
    std::vector<double> norms(static_cast<std::size_t>(trials));
    std::vector<double> hursts(static_cast<std::size_t>(trials));
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < trials; ++i) {
        auto engine = make_engine(trial_seed(cfg.seed, i));
        std::normal_distribution<double> gauss(0.0, sd);
        const double w = gauss(engine);
        const SignatureResult sig = fwis_closed_form_signature(f, hurst, t, w, depth);
        const double norm_est = estimate_fwis_norm(sig, window);
        wieners[static_cast<std::size_t>(i)] = w;
        norms[static_cast<std::size_t>(i)] = norm_est;
        hursts[static_cast<std::size_t>(i)] = hurst_from_limit(norm_est / 2.0, t);
    }

    nlohmann::json report = base_report({{"experiment", "estimate-hurst"},
                                         {"dim", 1},
                                         {"depth", depth},
                                         {"trials", trials},
                                         {"seed", cfg.seed},
                                         {"norm", "l2"},
                                         {"hurst", hurst},
                                         {"t", t},
                                         {"window", {window.lo, window.hi}}});
    for (int i = 0; i < trials; ++i)
        report["trials"].push_back({{"trial", i},
                                    {"seed", trial_seed(cfg.seed, i)},
                                    {"wiener", wieners[static_cast<std::size_t>(i)]},
                                    {"fwis_norm", norms[static_cast<std::size_t>(i)]},
                                    {"hurst", hursts[static_cast<std::size_t>(i)]}});
    const Moments mn = moments(norms);
    const Moments mh = moments(hursts);
    report["aggregates"] = {{"mean_fwis_norm", mn.mean},
                            {"stddev_fwis_norm", mn.stddev},
                            {"mean_hurst", mh.mean},
                            {"stddev_hurst", mh.stddev},
                            {"fwis_norm_target", norm_sq_target}};
    report["checks"].push_back(check_entry("mean fwis norm within 4% of t^{2H}", "hard", "derived",
                                           norm_sq_target, mn.mean, 0.04 * norm_sq_target));
    report["checks"].push_back(
        check_entry("mean hurst within 0.03", "hard", "derived", hurst, mh.mean, 0.03));
    return report;
}

nlohmann::json run_conjecture(const ExperimentConfig& cfg) {
    const int dim = pick(cfg.dim, 2);
    if (dim != 2) throw std::invalid_argument("conjecture: only d = 2 is supported");
    const int depth = pick(cfg.depth, 8);
    const int steps = pick(cfg.steps, 10000);
    const int trials = pick(cfg.trials, 500);
    const double t = pick(cfg.horizon, 1.0);
    const std::vector<double> V{2.0, 0.0, 0.0, 1.0};
    const double det_v = 2.0;
    const Window window = window_or_default(cfg.window, depth);
    validate_window(window, depth);

    // columns: [0] base l1, [1] base l2, [2] VB l1, [3] VB l2
    std::vector<std::array<double, 4>> limits(static_cast<std::size_t>(trials));
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < trials; ++i) {
        const SamplePath base = simulate_bm(dim, t, steps, trial_seed(cfg.seed, i));
        const SamplePath mapped = apply_linear(base, V);
        const SignatureResult sig_base = geometric_signature(base, depth);
        const SignatureResult sig_mapped = geometric_signature(mapped, depth);
        auto& row = limits[static_cast<std::size_t>(i)];
        row[0] = limit_functional(sig_base, window, NormKind::L1).value;
        row[1] = limit_functional(sig_base, window, NormKind::L2).value;
        row[2] = limit_functional(sig_mapped, window, NormKind::L1).value;
        row[3] = limit_functional(sig_mapped, window, NormKind::L2).value;
    }

    nlohmann::json report = base_report({{"experiment", "conjecture"},
                                         {"dim", dim},
                                         {"depth", depth},
                                         {"steps", steps},
                                         {"trials", trials},
                                         {"seed", cfg.seed},
                                         {"t", t},
                                         {"V", V},
                                         {"det_V", det_v},
                                         {"window", {window.lo, window.hi}}});
    for (int i = 0; i < trials; ++i) {
        const auto& row = limits[static_cast<std::size_t>(i)];
        report["trials"].push_back({{"trial", i},
                                    {"seed", trial_seed(cfg.seed, i)},
                                    {"L_base_l1", row[0]},
                                    {"L_base_l2", row[1]},
                                    {"L_linear_l1", row[2]},
                                    {"L_linear_l2", row[3]}});
    }

    std::vector<double> column(static_cast<std::size_t>(trials));
    std::array<Moments, 4> stats;
    for (int c = 0; c < 4; ++c) {
        for (int i = 0; i < trials; ++i) column[static_cast<std::size_t>(i)] = limits[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
        stats[static_cast<std::size_t>(c)] = moments(column);
    }
    const double kappa_base_l1 = stats[0].mean / t;
    const double kappa_base_l2 = stats[1].mean / t;
    const double kappa_linear_l1 = stats[2].mean / (det_v * t);
    const double kappa_linear_l2 = stats[3].mean / (det_v * t);
    const double ratio_l1 = stats[2].mean / stats[0].mean;
    const double ratio_l2 = stats[3].mean / stats[1].mean;
    report["aggregates"] = {{"mean_L", {stats[0].mean, stats[1].mean, stats[2].mean, stats[3].mean}},
                            {"stderr_L",
                             {stats[0].stderr_mean, stats[1].stderr_mean, stats[2].stderr_mean,
                              stats[3].stderr_mean}},
                            {"kappa", {{"base_l1", kappa_base_l1},
                                       {"base_l2", kappa_base_l2},
                                       {"linear_l1", kappa_linear_l1},
                                       {"linear_l2", kappa_linear_l2}}},
                            {"det_ratio", {{"l1", ratio_l1}, {"l2", ratio_l2}}}};

    const double lo = 0.5, hi = 4.0;
    report["checks"].push_back(
        interval_check("kappa (identity, l1) inside the [0.5, 4] bracket", "hard", "derived", lo, hi, kappa_base_l1));
    report["checks"].push_back(
        interval_check("kappa (identity, l2) inside the [0.5, 4] bracket", "hard", "derived", lo, hi, kappa_base_l2));
    report["checks"].push_back(
        interval_check("kappa (diag(2,1), l1) inside the [0.5, 4] bracket", "hard", "derived", lo, hi, kappa_linear_l1));
    report["checks"].push_back(
        interval_check("kappa (diag(2,1), l2) inside the [0.5, 4] bracket", "hard", "derived", lo, hi, kappa_linear_l2));
    report["checks"].push_back(check_entry("kappa (identity, l1) near the conjectured 1.3", "informational",
                                           "conjecture", 1.3, kappa_base_l1, 0.25 * 1.3));
    report["checks"].push_back(check_entry("kappa (identity, l2) near the conjectured 0.7", "informational",
                                           "conjecture", 0.7, kappa_base_l2, 0.25 * 0.7));
    report["checks"].push_back(check_entry("determinant scaling ratio (l1)", "informational",
                                           "conjecture", det_v, ratio_l1, 0.25 * det_v));
    report["checks"].push_back(check_entry("determinant scaling ratio (l2)", "informational",
                                           "conjecture", det_v, ratio_l2, 0.25 * det_v));
    return report;
}

bool hard_checks_pass(const nlohmann::json& report) {
    for (const auto& check : report.at("checks"))
        if (check.at("kind") == "hard" && !check.at("passed").get<bool>()) return false;
    return true;
}

}
