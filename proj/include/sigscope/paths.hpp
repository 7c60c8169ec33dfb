#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace sigscope {

// Sampled d-dimensional path on a strictly increasing grid starting at 0;
// row 0 of values is the zero vector.
struct SamplePath {
    std::vector<double> times;   // m+1 grid points, times[0] == 0
    std::vector<double> values;  // row-major (m+1) x dim
    int dim = 1;
    std::string generator;
    std::uint64_t seed = 0;

    std::size_t points() const { return times.size(); }
    std::size_t steps() const { return times.size() - 1; }
    double value(std::size_t row, int coord) const {
        return values[row * static_cast<std::size_t>(dim) + static_cast<std::size_t>(coord)];
    }
};

struct FbmSpec {
    double hurst = 0.5;   // in (0,1)
    double horizon = 1.0; // T > 0
    int steps = 1;        // m >= 1
    int dim = 1;          // independent coordinates
};

// Standard d-dimensional Brownian motion on the uniform m-step grid over
// [0,T]; increments N(0, dt) per coordinate, deterministic in seed.
SamplePath simulate_bm(int dim, double horizon, int steps, std::uint64_t seed);

// Row-wise image under the square matrix V (row-major d x d).
SamplePath apply_linear(const SamplePath& path, const std::vector<double>& V);

// Exact-law fBM: centered Gaussian with covariance R_H(s,t) on the grid,
// via a Cholesky factor cached per (hurst, horizon, steps).
SamplePath simulate_fbm(const FbmSpec& spec, std::uint64_t seed);

// R_H(s,t) = (t^{2H} + s^{2H} - |t-s|^{2H}) / 2.
double fbm_covariance(double hurst, double s, double t);

// theta_H(s,t) = H(2H-1)|s-t|^{2H-2}; H in (1/2,1), s != t.
double theta_kernel(double hurst, double s, double t);

// Piecewise-constant integrand: vals[i] on [knots[i], knots[i+1]).
struct StepFunction {
    std::vector<double> knots;  // strictly increasing, knots.front() == 0
    std::vector<double> vals;   // size knots.size() - 1

    double at(double u) const;
};

StepFunction indicator(double t);

// Closed-form double integral of f(u) f(v) theta_H(u,v) over [0,t]^2, exact
// per cell pair through the antiderivative of |u-v|^{2H-2}. Accepts H in
// [1/2, 1); at H = 1/2 the closed form reduces to the Ito isometry
// sum f_i^2 dt_i, which the H = 1/2 control experiments rely on.
double theta_norm_sq(const StepFunction& f, double hurst, double t);

// Left-point Riemann-Stieltjes sum of f against a scalar path.
double wiener_integral(const SamplePath& path, const StepFunction& f);

// Header `t,x1..xd`, one row per grid point, 17 significant digits.
void write_csv(const SamplePath& path, std::ostream& os);

}
