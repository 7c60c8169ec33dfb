#include "sigscope/signatures.hpp"

#include <cmath>
#include <stdexcept>

#include "sigscope/hermite.hpp"
#include "sigscope/kernels.hpp"

namespace sigscope {

std::string flavor_name(SignatureFlavor flavor) {
    switch (flavor) {
        case SignatureFlavor::Geometric: return "geometric";
        case SignatureFlavor::ItoDiscrete: return "ito_discrete";
        case SignatureFlavor::ItoClosedForm1D: return "ito_closed_form_1d";
        default: return "fwis_closed_form_1d";
    }
}

namespace {

void check_path(const SamplePath& path, int depth) {
    if (depth < 1) throw std::invalid_argument("signature: depth must be >= 1");
    if (path.points() < 2) throw std::invalid_argument("signature: path needs at least one step");
}

SignatureResult make_result(TensorSeries series, SignatureFlavor flavor) {
    SignatureResult out{std::move(series), flavor, 0.0, 0.0, std::string(), false, 0.0, 0.0};
    return out;
}

}

SignatureResult geometric_signature(const SamplePath& path, int depth) {
    check_path(path, depth);
    const int d = path.dim;
    SignatureResult out = make_result(TensorSeries::unit(d, depth), SignatureFlavor::Geometric);
    out.t1 = path.times.back();
    out.path_meta = path.generator;
    TensorSeries segment(d, depth);
    std::vector<double> increment(static_cast<std::size_t>(d));
    for (std::size_t k = 0; k + 1 < path.points(); ++k) {
        for (int c = 0; c < d; ++c)
            increment[static_cast<std::size_t>(c)] = path.value(k + 1, c) - path.value(k, c);
        tensor_exp_into(segment, increment.data());
        concat_inplace(out.series, segment);
    }
    return out;
}

SignatureResult ito_discrete_signature(const SamplePath& path, int depth) {
    check_path(path, depth);
    const int d = path.dim;
    SignatureResult out = make_result(TensorSeries::unit(d, depth), SignatureFlavor::ItoDiscrete);
    out.t1 = path.times.back();
    out.path_meta = path.generator;
    TensorSeries& s = out.series;
    for (std::size_t k = 0; k + 1 < path.points(); ++k) {
        const double* lo = path.values.data() + k * static_cast<std::size_t>(d);
        const double* hi = lo + static_cast<std::size_t>(d);
        for (int n = depth; n >= 1; --n) {
            const double* prev = s.level(n - 1);
            double* cur = s.level(n);
            const std::size_t prev_size = s.level_size(n - 1);
            for (std::size_t i = 0; i < prev_size; ++i) {
                const double v = prev[i];
                if (v == 0.0) continue;
                double* row = cur + i * static_cast<std::size_t>(d);
                for (int c = 0; c < d; ++c) row[c] += v * (hi[c] - lo[c]);
            }
        }
    }
    return out;
}

SignatureResult closed_form_ito_signature_1d(double qv, double x_t, int depth) {
    if (qv < 0) throw std::invalid_argument("closed_form_ito_signature_1d: qv must be >= 0");
    if (depth < 1) throw std::invalid_argument("closed_form_ito_signature_1d: depth must be >= 1");
    SignatureResult out = make_result(TensorSeries::unit(1, depth), SignatureFlavor::ItoClosedForm1D);
    out.has_scale_meta = true;
    out.scale = qv;
    out.endpoint = x_t;
    for (int n = 1; n <= depth; ++n) out.series.level(n)[0] = ito_iterated_integral(n, qv, x_t);
    return out;
}

SignatureResult ito_strat_convert_1d(const SignatureResult& strat, double qv) {
    if (strat.series.dim() != 1) throw std::invalid_argument("ito_strat_convert_1d: needs d = 1");
    SignatureResult out = strat;
    out.flavor = SignatureFlavor::ItoClosedForm1D;
    TensorSeries correction(1, strat.series.depth());
    correction.level(0)[0] = 1.0;
    double entry = 1.0;
    for (int k = 1; 2 * k <= strat.series.depth(); ++k) {
        entry *= (-qv / 2.0) / k;
        correction.level(2 * k)[0] = entry;
    }
    concat_inplace(out.series, correction);
    if (strat.series.depth() >= 1) {
        out.has_scale_meta = true;
        out.scale = qv;
        out.endpoint = out.series.level(1)[0];
    }
    return out;
}

SignatureResult fwis_closed_form_signature(const StepFunction& f, double hurst, double t,
                                           double wiener, int depth) {
    if (depth < 1) throw std::invalid_argument("fwis_closed_form_signature: depth must be >= 1");
    const double norm_sq = theta_norm_sq(f, hurst, t);  // validates hurst and t
    SignatureResult out = make_result(TensorSeries::unit(1, depth), SignatureFlavor::FwisClosedForm1D);
    out.t1 = t;
    out.has_scale_meta = true;
    out.scale = norm_sq;
    out.endpoint = wiener;
    for (int n = 1; n <= depth; ++n) out.series.level(n)[0] = ito_iterated_integral(n, norm_sq, wiener);
    return out;
}

nlohmann::json signature_to_json(const SignatureResult& sig) {
    nlohmann::json levels = nlohmann::json::array();
    for (int n = 0; n <= sig.series.depth(); ++n) {
        nlohmann::json block = nlohmann::json::array();
        const double* data = sig.series.level(n);
        for (std::size_t i = 0; i < sig.series.level_size(n); ++i) block.push_back(data[i]);
        levels.push_back(std::move(block));
    }
    return nlohmann::json{{"dim", sig.series.dim()},
                          {"depth", sig.series.depth()},
                          {"flavor", flavor_name(sig.flavor)},
                          {"levels", std::move(levels)}};
}

}
