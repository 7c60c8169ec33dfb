#pragma once

#include <string>

#include "json.hpp"
#include "sigscope/paths.hpp"
#include "sigscope/tensor_series.hpp"

namespace sigscope {

enum class SignatureFlavor { Geometric, ItoDiscrete, ItoClosedForm1D, FwisClosedForm1D };

std::string flavor_name(SignatureFlavor flavor);

struct SignatureResult {
    TensorSeries series;
    SignatureFlavor flavor;
    double t0 = 0.0;
    double t1 = 0.0;
    std::string path_meta;

    // Closed-form variants remember (qv-like scale, endpoint value) so the
    // limit functional can run the cosine-degeneracy diagnostic.
    bool has_scale_meta = false;
    double scale = 0.0;     // quadratic variation, or |f|^2 for fWIS
    double endpoint = 0.0;  // X_T, or the realized Wiener integral
};

// Signature of the piecewise-linear interpolation: fold of per-segment
// tensor exponentials under concatenation.
SignatureResult geometric_signature(const SamplePath& path, int depth);

// Left-point iterated sums S^n_{k+1} = S^n_k + S^{n-1}_k (x) dX_k.
SignatureResult ito_discrete_signature(const SamplePath& path, int depth);

// Scalar semimartingale closed form: level n = h_n(qv, x_t)/n!.
SignatureResult closed_form_ito_signature_1d(double qv, double x_t, int depth);

// d=1 conversion: concat with exp(-qv/2 e1e1): level-2k entry (-qv/2)^k/k!.
SignatureResult ito_strat_convert_1d(const SignatureResult& strat, double qv);

// fWIS closed form: level n = h_n(|f|^2_{theta,H,t}, W)/n! with W the
// realized Wiener integral. H in [1/2,1); H = 1/2 coincides with the Ito
// closed form, which the control experiments check.
SignatureResult fwis_closed_form_signature(const StepFunction& f, double hurst, double t,
                                           double wiener, int depth);

// {dim, depth, flavor, levels: [[...], ...]} with full double precision.
nlohmann::json signature_to_json(const SignatureResult& sig);

}
