#include "sigscope/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "sigscope/hermite.hpp"

namespace sigscope {

Window default_window(int depth) {
    return Window{(depth + 1) / 2, depth};
}

Window window_or_default(Window window, int depth) {
    return window.lo == 0 && window.hi == 0 ? default_window(depth) : window;
}

void validate_window(Window window, int depth) {
    if (window.lo > window.hi) throw std::invalid_argument("window is empty: lo > hi");
    if (window.lo < 2 || window.hi > depth)
        throw std::invalid_argument("window must lie in [2, " + std::to_string(depth) + "]");
}

namespace {

double level_a(int n, double norm_value) {
    if (norm_value <= 0.0) return 0.0;
    return std::exp((2.0 / n) * (std::lgamma(n / 2.0 + 1.0) + std::log(norm_value)));
}

}

LimitEstimate limit_functional(const SignatureResult& sig, Window window, NormKind norm) {
    const int depth = sig.series.depth();
    validate_window(window, depth);
    LimitEstimate est;
    est.window = window;
    est.norm = norm;
    const bool diagnose = sig.has_scale_meta && sig.scale > 0.0;
    double best = 0.0, best_all = 0.0;
    for (int n = window.lo; n <= window.hi; ++n) {
        const double a = level_a(n, level_norm(sig.series, n, norm));
        const bool flagged = diagnose && hermite_cosine_degenerate(n, sig.scale, sig.endpoint);
        est.levels.push_back(n);
        est.a.push_back(a);
        est.degenerate.push_back(flagged);
        best_all = std::max(best_all, a);
        if (flagged)
            ++est.flagged;
        else
            best = std::max(best, a);
    }
    est.all_flagged = est.flagged == static_cast<int>(est.levels.size());
    est.value = est.all_flagged ? best_all : best;
    return est;
}

double estimate_qv(const SignatureResult& sig, Window window) {
    const bool ito_scalar =
        sig.flavor == SignatureFlavor::ItoClosedForm1D ||
        (sig.flavor == SignatureFlavor::ItoDiscrete && sig.series.dim() == 1);
    if (!ito_scalar) throw std::invalid_argument("estimate_qv: needs a scalar Ito signature");
    return 2.0 * limit_functional(sig, window_or_default(window, sig.series.depth()), NormKind::L2).value;
}

double estimate_fwis_norm(const SignatureResult& sig, Window window) {
    if (sig.flavor != SignatureFlavor::FwisClosedForm1D)
        throw std::invalid_argument("estimate_fwis_norm: needs a fWIS closed-form signature");
    return 2.0 * limit_functional(sig, window_or_default(window, sig.series.depth()), NormKind::L2).value;
}

double hurst_from_limit(double limit_value, double t) {
    if (t <= 1.0) throw std::invalid_argument("hurst estimation: requires t > 1");
    if (limit_value <= 0.0) throw std::invalid_argument("hurst estimation: limit value must be > 0");
    return std::log(2.0 * limit_value) / (2.0 * std::log(t));
}

double estimate_hurst(const SignatureResult& sig, double t, Window window) {
    if (sig.flavor != SignatureFlavor::FwisClosedForm1D)
        throw std::invalid_argument("estimate_hurst: needs a fWIS closed-form signature");
    const double value =
        limit_functional(sig, window_or_default(window, sig.series.depth()), NormKind::L2).value;
    return hurst_from_limit(value, t);
}

nlohmann::json limit_estimate_to_json(const LimitEstimate& est) {
    nlohmann::json flags = nlohmann::json::array();
    for (const bool b : est.degenerate) flags.push_back(b);
    return nlohmann::json{{"value", est.value},
                          {"window", {est.window.lo, est.window.hi}},
                          {"norm", est.norm == NormKind::L1 ? "l1" : "l2"},
                          {"levels", est.levels},
                          {"a", est.a},
                          {"degenerate", std::move(flags)},
                          {"flagged", est.flagged},
                          {"all_flagged", est.all_flagged}};
}

}
