#include "sigscope/paths.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <random>
#include <stdexcept>
#include <tuple>

#include "sigscope/rng.hpp"

namespace sigscope {

SamplePath simulate_bm(int dim, double horizon, int steps, std::uint64_t seed) {
    if (dim < 1) throw std::invalid_argument("simulate_bm: dim must be >= 1");
    if (horizon <= 0) throw std::invalid_argument("simulate_bm: horizon must be > 0");
    if (steps < 1) throw std::invalid_argument("simulate_bm: steps must be >= 1");
    SamplePath path;
    path.dim = dim;
    path.generator = "bm";
    path.seed = seed;
    const std::size_t rows = static_cast<std::size_t>(steps) + 1;
    path.times.resize(rows);
    path.values.assign(rows * static_cast<std::size_t>(dim), 0.0);
    const double dt = horizon / steps;
    const double sd = std::sqrt(dt);
    auto engine = make_engine(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (std::size_t i = 1; i < rows; ++i) {
        path.times[i] = static_cast<double>(i) * dt;
        for (int c = 0; c < dim; ++c) {
            const std::size_t idx = i * static_cast<std::size_t>(dim) + static_cast<std::size_t>(c);
            path.values[idx] = path.values[idx - static_cast<std::size_t>(dim)] + sd * gauss(engine);
        }
    }
    path.times[steps] = horizon;
    return path;
}

SamplePath apply_linear(const SamplePath& path, const std::vector<double>& V) {
    const std::size_t d = static_cast<std::size_t>(path.dim);
    if (V.size() != d * d) throw std::invalid_argument("apply_linear: V must be dim x dim");
    SamplePath out = path;
    out.generator = path.generator + "*linear";
    for (std::size_t row = 0; row < path.points(); ++row) {
        const double* src = path.values.data() + row * d;
        double* dst = out.values.data() + row * d;
        for (std::size_t r = 0; r < d; ++r) {
            double acc = 0.0;
            for (std::size_t c = 0; c < d; ++c) acc += V[r * d + c] * src[c];
            dst[r] = acc;
        }
    }
    return out;
}

double fbm_covariance(double hurst, double s, double t) {
    const double two_h = 2.0 * hurst;
    return 0.5 * (std::pow(t, two_h) + std::pow(s, two_h) - std::pow(std::abs(t - s), two_h));
}

namespace {

// Lower-triangular Cholesky factor of [R_H(t_i,t_j)] on the interior grid
// points t_1..t_m (t_0 = 0 contributes the deterministic zero row).
struct FbmFactor {
    std::vector<double> grid;   // t_1..t_m
    std::vector<double> lower;  // row-major m x m, lower triangle
};

std::shared_ptr<const FbmFactor> fbm_factor(double hurst, double horizon, int steps) {
    using Key = std::tuple<double, double, int>;
    static std::mutex cache_mutex;
    static std::map<Key, std::shared_ptr<const FbmFactor>> cache;
    const Key key{hurst, horizon, steps};
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto factor = std::make_shared<FbmFactor>();
    const std::size_t m = static_cast<std::size_t>(steps);
    factor->grid.resize(m);
    for (std::size_t i = 0; i < m; ++i)
        factor->grid[i] = horizon * static_cast<double>(i + 1) / static_cast<double>(steps);
    std::vector<double>& L = factor->lower;
    L.assign(m * m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double acc = fbm_covariance(hurst, factor->grid[i], factor->grid[j]);
            for (std::size_t k = 0; k < j; ++k) acc -= L[i * m + k] * L[j * m + k];
            if (i == j) {
                if (acc <= 0.0)
                    throw std::runtime_error("simulate_fbm: covariance factorization failed (non-PSD pivot)");
                L[i * m + i] = std::sqrt(acc);
            } else {
                L[i * m + j] = acc / L[j * m + j];
            }
        }
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto [it, inserted] = cache.emplace(key, std::move(factor));
    (void)inserted;
    return it->second;
}

}

SamplePath simulate_fbm(const FbmSpec& spec, std::uint64_t seed) {
    if (!(spec.hurst > 0.0 && spec.hurst < 1.0))
        throw std::invalid_argument("simulate_fbm: hurst must lie in (0,1)");
    if (spec.horizon <= 0) throw std::invalid_argument("simulate_fbm: horizon must be > 0");
    if (spec.steps < 1) throw std::invalid_argument("simulate_fbm: steps must be >= 1");
    if (spec.dim < 1) throw std::invalid_argument("simulate_fbm: dim must be >= 1");
    auto factor = fbm_factor(spec.hurst, spec.horizon, spec.steps);
    const std::size_t m = static_cast<std::size_t>(spec.steps);
    const std::size_t d = static_cast<std::size_t>(spec.dim);
    SamplePath path;
    path.dim = spec.dim;
    path.generator = "fbm";
    path.seed = seed;
    path.times.resize(m + 1);
    path.times[0] = 0.0;
    std::copy(factor->grid.begin(), factor->grid.end(), path.times.begin() + 1);
    path.values.assign((m + 1) * d, 0.0);
    auto engine = make_engine(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> z(m);
    const std::vector<double>& L = factor->lower;
    for (std::size_t c = 0; c < d; ++c) {
        for (std::size_t i = 0; i < m; ++i) z[i] = gauss(engine);
        for (std::size_t i = 0; i < m; ++i) {
            double acc = 0.0;
            for (std::size_t k = 0; k <= i; ++k) acc += L[i * m + k] * z[k];
            path.values[(i + 1) * d + c] = acc;
        }
    }
    return path;
}

double theta_kernel(double hurst, double s, double t) {
    if (!(hurst > 0.5 && hurst < 1.0))
        throw std::invalid_argument("theta_kernel: hurst must lie in (1/2,1)");
    if (s == t) throw std::invalid_argument("theta_kernel: singular on the diagonal");
    return hurst * (2.0 * hurst - 1.0) * std::pow(std::abs(s - t), 2.0 * hurst - 2.0);
}

double StepFunction::at(double u) const {
    if (knots.empty() || u < knots.front() || u >= knots.back()) return 0.0;
    const auto it = std::upper_bound(knots.begin(), knots.end(), u);
    return vals[static_cast<std::size_t>(it - knots.begin()) - 1];
}

StepFunction indicator(double t) {
    if (t <= 0) throw std::invalid_argument("indicator: t must be > 0");
    return StepFunction{{0.0, t}, {1.0}};
}

namespace {

void check_step_function(const StepFunction& f) {
    if (f.knots.size() < 2 || f.vals.size() + 1 != f.knots.size())
        throw std::invalid_argument("step function: needs K+1 knots for K values");
    if (f.knots.front() != 0.0)
        throw std::invalid_argument("step function: domain must start at 0");
    for (std::size_t i = 1; i < f.knots.size(); ++i)
        if (!(f.knots[i] > f.knots[i - 1]))
            throw std::invalid_argument("step function: knots must be strictly increasing");
}

// integral of theta_H over [a,b] x [c,e]; antiderivative of
// H(2H-1)|u-v|^{2H-2} in (u,v) is -|u-v|^{2H}/2.
double theta_cell_integral(double hurst, double a, double b, double c, double e) {
    const double two_h = 2.0 * hurst;
    auto g = [two_h](double u, double v) { return -0.5 * std::pow(std::abs(u - v), two_h); };
    return g(b, e) - g(b, c) - g(a, e) + g(a, c);
}

}

double theta_norm_sq(const StepFunction& f, double hurst, double t) {
    check_step_function(f);
    if (!(hurst >= 0.5 && hurst < 1.0))
        throw std::invalid_argument("theta_norm_sq: hurst must lie in [1/2,1)");
    if (t <= 0) throw std::invalid_argument("theta_norm_sq: t must be > 0");
    // clip cells at t
    std::vector<double> lo, hi, fv;
    for (std::size_t i = 0; i < f.vals.size(); ++i) {
        const double a = f.knots[i];
        const double b = std::min(f.knots[i + 1], t);
        if (a >= t) break;
        if (f.vals[i] != 0.0) {
            lo.push_back(a);
            hi.push_back(b);
            fv.push_back(f.vals[i]);
        }
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < fv.size(); ++i)
        for (std::size_t j = 0; j < fv.size(); ++j)
            acc += fv[i] * fv[j] * theta_cell_integral(hurst, lo[i], hi[i], lo[j], hi[j]);
    return acc;
}

double wiener_integral(const SamplePath& path, const StepFunction& f) {
    check_step_function(f);
    if (path.dim != 1) throw std::invalid_argument("wiener_integral: path must be scalar");
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < path.points(); ++i)
        acc += f.at(path.times[i]) * (path.values[i + 1] - path.values[i]);
    return acc;
}

void write_csv(const SamplePath& path, std::ostream& os) {
    os << "t";
    for (int c = 1; c <= path.dim; ++c) os << ",x" << c;
    os << "\n";
    char buf[32];
    for (std::size_t row = 0; row < path.points(); ++row) {
        std::snprintf(buf, sizeof buf, "%.17g", path.times[row]);
        os << buf;
        for (int c = 0; c < path.dim; ++c) {
            std::snprintf(buf, sizeof buf, "%.17g", path.value(row, c));
            os << "," << buf;
        }
        os << "\n";
    }
}

}
