#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"
#include "sigscope/estimators.hpp"
#include "sigscope/tensor_series.hpp"

namespace sigscope {

// Shared knob set for the Monte-Carlo drivers; zeros mean "experiment
// default". Every run_* echoes the resolved values into its report.
struct ExperimentConfig {
    int dim = 0;
    int depth = 0;
    int steps = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    NormKind norm = NormKind::L2;
    double hurst = 0.75;
    double horizon = 0.0;  // the CLI's --t
    Window window{0, 0};
    bool check = false;
};

// Reports follow one schema:
// {schema_version, config, trials: [...], aggregates, checks: [...]}
// with aggregates recomputable from the per-trial rows. Checks carry
// kind "hard" or "informational" and a provenance label
// ("exact", "derived", or "conjecture") describing how the target is known.

// Per-level MC mean of |B^n|^2_{l2} for discrete Ito signatures of
// d-dimensional BM against the closed-form moment d^n t^n / n!.
nlohmann::json run_moment_identity(const ExperimentConfig& cfg);

// Distribution of estimate_qv over closed-form scalar signatures with
// endpoint draws X_T ~ N(0, qv); qv is the configured horizon.
nlohmann::json run_qv_recovery(const ExperimentConfig& cfg);

// Distribution of estimate_fwis_norm and estimate_hurst over fWIS
// closed-form signatures with W ~ N(0, t^{2H}).
nlohmann::json run_hurst_recovery(const ExperimentConfig& cfg);

// Geometric signatures of X = VB for V in {I, diag(2,1)}: windowed L per
// norm, kappa = L / (|det V| t) against the [1/2, 4] interval, plus the
// determinant-scaling ratio, with common random numbers across the two V.
nlohmann::json run_conjecture(const ExperimentConfig& cfg);

// True when every check of kind "hard" in the report passed.
bool hard_checks_pass(const nlohmann::json& report);

}
