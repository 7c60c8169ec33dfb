#pragma once

#include <vector>

#include "json.hpp"
#include "sigscope/signatures.hpp"
#include "sigscope/tensor_series.hpp"

namespace sigscope {

struct Window {
    int lo = 0;
    int hi = 0;
};

// Default window [ceil(N/2), N].
Window default_window(int depth);

// {0, 0} stands for the default window at this depth.
Window window_or_default(Window window, int depth);

// Enforce 2 <= lo <= hi <= depth.
void validate_window(Window window, int depth);

// Windowed surrogate for L = limsup_n (Gamma(n/2+1) |X^n|_n)^{2/n}.
struct LimitEstimate {
    double value = 0.0;  // max of a_n over the window, degenerate levels excluded
    Window window;
    NormKind norm = NormKind::L2;
    std::vector<int> levels;
    std::vector<double> a;              // a_n = (Gamma(n/2+1) |X^n|)^{2/n}
    std::vector<bool> degenerate;       // cosine-degeneracy diagnostic per level
    int flagged = 0;
    bool all_flagged = false;           // if so, value falls back to the max over all levels
};

// Window must satisfy 2 <= lo <= hi <= depth. Degeneracy flags are only
// available for closed-form signatures (which carry scale metadata);
// path-based signatures get no flags.
LimitEstimate limit_functional(const SignatureResult& sig, Window window, NormKind norm);

// <X> = 2L for scalar Ito signatures (discrete d=1 or closed form).
double estimate_qv(const SignatureResult& sig, Window window);

// |f|^2_{theta,H,t} = 2L for fWIS closed-form signatures.
double estimate_fwis_norm(const SignatureResult& sig, Window window);

// H = log(2L) / (2 log t); requires t > 1 (the max/limsup surrogate flips
// direction for t < 1 and t = 1 is degenerate).
double estimate_hurst(const SignatureResult& sig, double t, Window window);

// The pure inversion step, split out so its exactness is testable: feeding
// L = t^{2H}/2 must return H to machine precision.
double hurst_from_limit(double limit_value, double t);

nlohmann::json limit_estimate_to_json(const LimitEstimate& est);

}
