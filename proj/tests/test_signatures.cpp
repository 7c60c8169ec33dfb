#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "sigscope/hermite.hpp"
#include "sigscope/kernels.hpp"
#include "sigscope/rng.hpp"
#include "sigscope/signatures.hpp"

using namespace sigscope;

namespace {

SamplePath path_from_values(std::vector<double> times, std::vector<double> values, int dim) {
    SamplePath p;
    p.times = std::move(times);
    p.values = std::move(values);
    p.dim = dim;
    p.generator = "manual";
    return p;
}

double max_abs_diff(const TensorSeries& a, const TensorSeries& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i)
        worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
    return worst;
}

}

TEST_CASE("flavors are named after what they compute") {
    CHECK(flavor_name(SignatureFlavor::Geometric) == "geometric");
    CHECK(flavor_name(SignatureFlavor::ItoDiscrete) == "ito_discrete");
    CHECK(flavor_name(SignatureFlavor::ItoClosedForm1D) == "ito_closed_form_1d");
    CHECK(flavor_name(SignatureFlavor::FwisClosedForm1D) == "fwis_closed_form_1d");
}

TEST_CASE("geometric signature of one segment is the tensor exponential") {
    SamplePath p = path_from_values({0.0, 1.0}, {0.0, 0.0, 0.7, -0.4}, 2);
    SignatureResult sig = geometric_signature(p, 5);
    CHECK(sig.flavor == SignatureFlavor::Geometric);
    CHECK(sig.t1 == 1.0);
    CHECK(max_abs_diff(sig.series, tensor_exp({0.7, -0.4}, 5)) < 1e-15);
}

TEST_CASE("geometric signature satisfies the two-segment product rule") {
    SamplePath whole = path_from_values({0.0, 0.5, 1.0}, {0.0, 0.0, 0.3, 1.1, -0.2, 0.6}, 2);
    SamplePath left = path_from_values({0.0, 0.5}, {0.0, 0.0, 0.3, 1.1}, 2);
    SamplePath right = path_from_values({0.5, 1.0}, {0.3, 1.1, -0.2, 0.6}, 2);
    TensorSeries product =
        concat(geometric_signature(left, 6).series, geometric_signature(right, 6).series);
    CHECK(max_abs_diff(geometric_signature(whole, 6).series, product) < 1e-14);
}

TEST_CASE("level one of both path signatures is the total increment") {
    SamplePath p = simulate_bm(3, 1.0, 40, 5);
    for (const auto& sig : {geometric_signature(p, 3), ito_discrete_signature(p, 3)}) {
        for (int c = 0; c < 3; ++c)
            CHECK(sig.series.level(1)[c] ==
                  doctest::Approx(p.value(40, c)).epsilon(1e-12));
    }
}

TEST_CASE("scalar geometric level two is half the squared increment") {
    SamplePath p = simulate_bm(1, 1.0, 25, 9);
    SignatureResult sig = geometric_signature(p, 4);
    const double x = p.values.back();
    CHECK(sig.series.level(2)[0] == doctest::Approx(x * x / 2.0).epsilon(1e-12));
    CHECK(sig.series.level(3)[0] == doctest::Approx(x * x * x / 6.0).epsilon(1e-12));
}

TEST_CASE("scalar discrete signature computes elementary symmetric sums") {
    // Level n of the left-point iterated sum is e_n(dx_1..dx_m), which the
    // product recurrence prod(1 + u dx_i) builds independently.
    SamplePath p = simulate_bm(1, 1.0, 8, 33);
    const int depth = 6;
    SignatureResult sig = ito_discrete_signature(p, depth);
    std::vector<double> e(depth + 1, 0.0);
    e[0] = 1.0;
    for (std::size_t i = 0; i + 1 < p.points(); ++i) {
        const double dx = p.values[i + 1] - p.values[i];
        for (int n = depth; n >= 1; --n) e[n] += e[n - 1] * dx;
    }
    for (int n = 0; n <= depth; ++n)
        CHECK(sig.series.level(n)[0] == doctest::Approx(e[n]).epsilon(1e-12));
}

TEST_CASE("scalar discrete level two matches the telescoped closed form") {
    SamplePath p = simulate_bm(1, 2.0, 50, 12);
    double qv = 0.0;
    for (std::size_t i = 0; i + 1 < p.points(); ++i) {
        const double dx = p.values[i + 1] - p.values[i];
        qv += dx * dx;
    }
    const double x = p.values.back();
    SignatureResult sig = ito_discrete_signature(p, 2);
    CHECK(sig.series.level(2)[0] == doctest::Approx((x * x - qv) / 2.0).epsilon(1e-10));
}

TEST_CASE("path signatures validate their input") {
    SamplePath p = simulate_bm(1, 1.0, 4, 1);
    CHECK_THROWS_AS(geometric_signature(p, 0), std::invalid_argument);
    SamplePath single = path_from_values({0.0}, {0.0}, 1);
    CHECK_THROWS_AS(ito_discrete_signature(single, 3), std::invalid_argument);
}

TEST_CASE("closed-form Ito signature levels are the scaled Hermite values") {
    const double qv = 1.3, x = 0.7;
    SignatureResult sig = closed_form_ito_signature_1d(qv, x, 8);
    CHECK(sig.flavor == SignatureFlavor::ItoClosedForm1D);
    CHECK(sig.has_scale_meta);
    CHECK(sig.scale == qv);
    CHECK(sig.endpoint == x);
    for (int n = 1; n <= 8; ++n)
        CHECK(sig.series.level(n)[0] == doctest::Approx(ito_iterated_integral(n, qv, x)));
    CHECK(sig.series.level(1)[0] == doctest::Approx(x));
    CHECK(sig.series.level(2)[0] == doctest::Approx((x * x - qv) / 2.0));
    CHECK_THROWS_AS(closed_form_ito_signature_1d(-1.0, 0.0, 4), std::invalid_argument);
}

TEST_CASE("closed form at qv = 0 degenerates to the exponential of the endpoint") {
    SignatureResult sig = closed_form_ito_signature_1d(0.0, 0.9, 6);
    CHECK(max_abs_diff(sig.series, tensor_exp({0.9}, 6)) < 1e-15);
}

TEST_CASE("closed form at x = 0 keeps only even levels") {
    const double t = 0.8;
    SignatureResult sig = closed_form_ito_signature_1d(t, 0.0, 6);
    CHECK(sig.series.level(1)[0] == 0.0);
    CHECK(sig.series.level(2)[0] == doctest::Approx(-t / 2.0));
    CHECK(sig.series.level(3)[0] == 0.0);
    CHECK(sig.series.level(4)[0] == doctest::Approx(t * t / 8.0));
}

TEST_CASE("Stratonovich-to-Ito conversion reproduces the closed form") {
    // exp(x u) . exp(-qv u^2 / 2) = sum h_n(qv, x) u^n / n!
    const double qv = 0.9, x = 1.2;
    SignatureResult strat = closed_form_ito_signature_1d(0.0, x, 10);
    SignatureResult ito = ito_strat_convert_1d(strat, qv);
    SignatureResult expect = closed_form_ito_signature_1d(qv, x, 10);
    CHECK(max_abs_diff(ito.series, expect.series) < 1e-12);
    CHECK(ito.flavor == SignatureFlavor::ItoClosedForm1D);
    CHECK(ito.scale == qv);
    CHECK(ito.endpoint == doctest::Approx(x));
}

TEST_CASE("conversion with -qv undoes the conversion with qv") {
    SamplePath p = simulate_bm(1, 1.0, 20, 77);
    SignatureResult strat = geometric_signature(p, 9);
    SignatureResult there = ito_strat_convert_1d(strat, 1.7);
    SignatureResult back = ito_strat_convert_1d(there, -1.7);
    CHECK(max_abs_diff(back.series, strat.series) < 1e-12);
    SamplePath wide = simulate_bm(2, 1.0, 4, 1);
    CHECK_THROWS_AS(ito_strat_convert_1d(geometric_signature(wide, 3), 1.0),
                    std::invalid_argument);
}

TEST_CASE("fwis closed form at H = 1/2 coincides with the Ito closed form") {
    const double t = 1.7, w = 0.45;
    SignatureResult fwis = fwis_closed_form_signature(indicator(t), 0.5, t, w, 12);
    SignatureResult ito = closed_form_ito_signature_1d(t, w, 12);
    CHECK(max_abs_diff(fwis.series, ito.series) < 1e-14);
    CHECK(fwis.flavor == SignatureFlavor::FwisClosedForm1D);
    CHECK(fwis.scale == doctest::Approx(t));
    CHECK(fwis.series.level(1)[0] == doctest::Approx(w));
}

TEST_CASE("fwis chaos components have the Hermite second moments") {
    // E[h_n(s2, W)^2] = n! s2^n for W ~ N(0, s2). Estimated by importance
    // sampling from N(0, 2.5^2), which keeps the relative stderr below half a
    // percent up to n = 6.
    const double t = 2.0, hurst = 0.75;
    const double s2 = theta_norm_sq(indicator(t), hurst, t);
    const double prop_sd = 2.5;
    const int draws = 100000;
    auto engine = make_engine(424242);
    std::normal_distribution<double> gauss(0.0, prop_sd);
    std::vector<double> acc(7, 0.0);
    double factorial[7];
    factorial[0] = 1.0;
    for (int n = 1; n <= 6; ++n) factorial[n] = factorial[n - 1] * n;
    for (int i = 0; i < draws; ++i) {
        const double y = gauss(engine);
        const double weight =
            prop_sd * std::exp(-0.5 * y * y * (1.0 - 1.0 / (prop_sd * prop_sd)));
        SignatureResult sig =
            fwis_closed_form_signature(indicator(t), hurst, t, std::sqrt(s2) * y, 6);
        for (int n = 2; n <= 6; n += 2) {
            const double h = sig.series.level(n)[0] * factorial[n];
            acc[n] += h * h * weight;
        }
    }
    for (int n = 2; n <= 6; n += 2) {
        const double target = factorial[n] * std::pow(s2, n);
        CHECK(acc[n] / draws == doctest::Approx(target).epsilon(0.05));
    }
}

TEST_CASE("geometric level norms obey the one-variation factorial bound") {
    SamplePath p = simulate_bm(2, 1.0, 30, 55);
    SignatureResult sig = geometric_signature(p, 8);
    double variation = 0.0;
    for (std::size_t i = 0; i + 1 < p.points(); ++i)
        for (int c = 0; c < 2; ++c)
            variation += std::abs(p.value(i + 1, c) - p.value(i, c));
    double bound = 1.0;
    for (int n = 1; n <= 8; ++n) {
        bound *= variation / n;
        CHECK(level_norm(sig.series, n, NormKind::L1) <= bound * (1.0 + 1e-12));
    }
}

TEST_CASE("signature JSON exposes dim, depth, flavor and full levels") {
    SignatureResult sig = closed_form_ito_signature_1d(1.0, 0.3, 3);
    nlohmann::json j = signature_to_json(sig);
    CHECK(j["dim"] == 1);
    CHECK(j["depth"] == 3);
    CHECK(j["flavor"] == "ito_closed_form_1d");
    REQUIRE(j["levels"].size() == 4);
    CHECK(j["levels"][0].size() == 1);
    CHECK(double(j["levels"][1][0]) == doctest::Approx(0.3));

    SamplePath p = simulate_bm(2, 1.0, 5, 2);
    nlohmann::json g = signature_to_json(geometric_signature(p, 2));
    CHECK(g["levels"][2].size() == 4);
    CHECK(g["flavor"] == "geometric");
}
