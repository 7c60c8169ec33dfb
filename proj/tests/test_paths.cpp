#include "doctest.h"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sigscope/paths.hpp"
#include "sigscope/rng.hpp"

using namespace sigscope;

TEST_CASE("simulate_bm lays out the uniform grid and starts at zero") {
    SamplePath p = simulate_bm(2, 1.5, 6, 42);
    REQUIRE(p.points() == 7);
    CHECK(p.steps() == 6);
    CHECK(p.times.front() == 0.0);
    CHECK(p.times.back() == 1.5);
    for (std::size_t i = 0; i < p.points(); ++i)
        CHECK(p.times[i] == doctest::Approx(1.5 * double(i) / 6.0));
    CHECK(p.value(0, 0) == 0.0);
    CHECK(p.value(0, 1) == 0.0);
    CHECK(p.generator == "bm");
    CHECK(p.seed == 42);
}

TEST_CASE("simulate_bm rejects bad arguments") {
    CHECK_THROWS_AS(simulate_bm(0, 1.0, 4, 1), std::invalid_argument);
    CHECK_THROWS_AS(simulate_bm(1, 0.0, 4, 1), std::invalid_argument);
    CHECK_THROWS_AS(simulate_bm(1, 1.0, 0, 1), std::invalid_argument);
}

TEST_CASE("path simulation is a pure function of the seed") {
    SamplePath a = simulate_bm(3, 2.0, 50, 7);
    SamplePath b = simulate_bm(3, 2.0, 50, 7);
    SamplePath c = simulate_bm(3, 2.0, 50, 8);
    CHECK(a.values == b.values);
    CHECK(a.times == b.times);
    CHECK(a.values != c.values);

    SamplePath f = simulate_fbm({0.7, 1.0, 16, 2}, 7);
    SamplePath g = simulate_fbm({0.7, 1.0, 16, 2}, 7);
    CHECK(f.values == g.values);
}

TEST_CASE("brownian endpoint matches its first two moments") {
    const int trials = 2000;
    double sum = 0.0, sum_sq = 0.0;
    for (int i = 0; i < trials; ++i) {
        SamplePath p = simulate_bm(1, 1.0, 16, trial_seed(900, i));
        const double x = p.values.back();
        sum += x;
        sum_sq += x * x;
    }
    const double mean = sum / trials;
    const double var = sum_sq / trials - mean * mean;
    CHECK(std::abs(mean) < 0.07);        // 3 sigma at 2000 draws
    CHECK(var == doctest::Approx(1.0).epsilon(0.10));
}

TEST_CASE("apply_linear multiplies every row by V") {
    SamplePath p = simulate_bm(2, 1.0, 10, 3);
    SamplePath q = apply_linear(p, {1.0, 1.0, 0.0, 1.0});
    for (std::size_t row = 0; row < p.points(); ++row) {
        CHECK(q.value(row, 0) == doctest::Approx(p.value(row, 0) + p.value(row, 1)));
        CHECK(q.value(row, 1) == p.value(row, 1));
    }
    CHECK_THROWS_AS(apply_linear(p, {1.0, 0.0, 1.0}), std::invalid_argument);
}

TEST_CASE("fbm covariance function has the closed form") {
    CHECK(fbm_covariance(0.5, 0.3, 0.8) == doctest::Approx(0.3));  // min(s,t) at H = 1/2
    CHECK(fbm_covariance(0.75, 1.0, 1.0) == doctest::Approx(1.0));
    CHECK(fbm_covariance(0.75, 1.0, 2.0) ==
          doctest::Approx(0.5 * (1.0 + std::pow(2.0, 1.5) - 1.0)));
}

TEST_CASE("fbm sample moments match the exact covariance") {
    for (const double hurst : {0.5, 0.75}) {
        const int trials = 10000;
        double sum_end_sq = 0.0, sum_cross = 0.0;
        for (int i = 0; i < trials; ++i) {
            SamplePath p = simulate_fbm({hurst, 2.0, 8, 1}, trial_seed(901, i));
            const double b1 = p.value(4, 0);  // t = 1
            const double b2 = p.value(8, 0);  // t = 2
            sum_end_sq += b2 * b2;
            sum_cross += b1 * b2;
        }
        CHECK(sum_end_sq / trials ==
              doctest::Approx(std::pow(2.0, 2.0 * hurst)).epsilon(0.05));
        CHECK(sum_cross / trials ==
              doctest::Approx(fbm_covariance(hurst, 1.0, 2.0)).epsilon(0.05));
    }
}

TEST_CASE("simulate_fbm validates its arguments") {
    CHECK_THROWS_AS(simulate_fbm({1.0, 1.0, 4, 1}, 1), std::invalid_argument);
    CHECK_THROWS_AS(simulate_fbm({0.7, -1.0, 4, 1}, 1), std::invalid_argument);
    CHECK_THROWS_AS(simulate_fbm({0.7, 1.0, 0, 1}, 1), std::invalid_argument);
}

TEST_CASE("theta kernel value and domain") {
    CHECK(theta_kernel(0.75, 0.0, 1.0) == doctest::Approx(0.375));
    CHECK(theta_kernel(0.8, 2.0, 0.5) ==
          doctest::Approx(0.8 * 0.6 * std::pow(1.5, -0.4)));
    CHECK_THROWS_AS(theta_kernel(0.5, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(theta_kernel(0.75, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("step function evaluates on half-open cells") {
    StepFunction f{{0.0, 0.5, 1.0}, {2.0, -1.0}};
    CHECK(f.at(0.0) == 2.0);
    CHECK(f.at(0.49) == 2.0);
    CHECK(f.at(0.5) == -1.0);
    CHECK(f.at(1.0) == 0.0);
    CHECK(f.at(-0.1) == 0.0);
    CHECK(indicator(2.0).at(1.99) == 1.0);
    CHECK_THROWS_AS(indicator(0.0), std::invalid_argument);
}

TEST_CASE("theta norm of an indicator is t^{2H}") {
    for (const double hurst : {0.5, 0.6, 0.75, 0.9}) {
        for (const double t : {0.5, 1.0, 2.0}) {
            CHECK(theta_norm_sq(indicator(t), hurst, t) ==
                  doctest::Approx(std::pow(t, 2.0 * hurst)).epsilon(1e-12));
        }
    }
}

TEST_CASE("theta norm clips the integration domain at t") {
    CHECK(theta_norm_sq(indicator(5.0), 0.75, 1.0) == doctest::Approx(1.0));
}

TEST_CASE("theta norm is invariant under knot refinement") {
    StepFunction coarse{{0.0, 0.5, 1.0}, {2.0, 1.0}};
    StepFunction fine{{0.0, 0.25, 0.5, 0.75, 1.0}, {2.0, 2.0, 1.0, 1.0}};
    for (const double hurst : {0.5, 0.65, 0.85}) {
        CHECK(theta_norm_sq(coarse, hurst, 1.0) ==
              doctest::Approx(theta_norm_sq(fine, hurst, 1.0)).epsilon(1e-10));
    }
}

TEST_CASE("theta inner products of indicators recover the fbm covariance") {
    // |1_{[0,s)} + 1_{[0,t)}|^2 = s^{2H} + t^{2H} + 2 R_H(s,t)
    const double s = 0.6, t = 1.4;
    StepFunction sum{{0.0, s, t}, {2.0, 1.0}};
    for (const double hurst : {0.55, 0.75, 0.95}) {
        const double expect =
            std::pow(s, 2 * hurst) + std::pow(t, 2 * hurst) + 2.0 * fbm_covariance(hurst, s, t);
        CHECK(theta_norm_sq(sum, hurst, t) == doctest::Approx(expect).epsilon(1e-10));
    }
}

TEST_CASE("theta norm at H = 1/2 is the plain L2 norm") {
    StepFunction f{{0.0, 0.3, 0.7, 1.0}, {2.0, -1.0, 0.5}};
    const double expect = 4.0 * 0.3 + 1.0 * 0.4 + 0.25 * 0.3;
    CHECK(theta_norm_sq(f, 0.5, 1.0) == doctest::Approx(expect).epsilon(1e-12));
    CHECK(theta_norm_sq(StepFunction{{0.0, 1.0}, {0.0}}, 0.75, 1.0) == 0.0);
}

TEST_CASE("theta norm rejects malformed input") {
    StepFunction f{{0.0, 1.0}, {1.0}};
    CHECK_THROWS_AS(theta_norm_sq(f, 0.4, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(theta_norm_sq(f, 1.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(theta_norm_sq(StepFunction{{0.5, 1.0}, {1.0}}, 0.75, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(theta_norm_sq(StepFunction{{0.0, 1.0}, {1.0, 2.0}}, 0.75, 1.0),
                    std::invalid_argument);
}

TEST_CASE("wiener integral of constants telescopes") {
    SamplePath p = simulate_bm(1, 1.0, 10, 17);
    const double x_end = p.values.back();
    CHECK(wiener_integral(p, indicator(1.0)) == doctest::Approx(x_end));
    CHECK(wiener_integral(p, StepFunction{{0.0, 1.0}, {2.5}}) == doctest::Approx(2.5 * x_end));
    // support [0, 0.5) picks up exactly the first five increments
    CHECK(wiener_integral(p, indicator(0.5)) == doctest::Approx(p.values[5]));
}

TEST_CASE("wiener integral satisfies the Ito isometry in the mean") {
    StepFunction f{{0.0, 0.3, 0.7, 1.0}, {2.0, -1.0, 0.5}};
    const double expect = theta_norm_sq(f, 0.5, 1.0);
    const int trials = 10000;
    double acc = 0.0;
    for (int i = 0; i < trials; ++i) {
        const double w = wiener_integral(simulate_bm(1, 1.0, 100, trial_seed(903, i)), f);
        acc += w * w;
    }
    CHECK(acc / trials == doctest::Approx(expect).epsilon(0.05));
}

TEST_CASE("csv output round-trips at full precision") {
    SamplePath p = simulate_bm(2, 1.0, 10, 23);
    std::ostringstream os;
    write_csv(p, os);
    std::istringstream is(os.str());
    std::string line;
    REQUIRE(std::getline(is, line));
    CHECK(line == "t,x1,x2");
    std::size_t row = 0;
    while (std::getline(is, line)) {
        std::size_t pos = 0;
        std::vector<double> fields;
        while (pos <= line.size()) {
            const std::size_t next = line.find(',', pos);
            const std::string tok = line.substr(pos, next == std::string::npos ? next : next - pos);
            fields.push_back(std::stod(tok));
            if (next == std::string::npos) break;
            pos = next + 1;
        }
        REQUIRE(fields.size() == 3);
        CHECK(fields[0] == p.times[row]);
        CHECK(fields[1] == p.value(row, 0));
        CHECK(fields[2] == p.value(row, 1));
        ++row;
    }
    CHECK(row == 11);
}
