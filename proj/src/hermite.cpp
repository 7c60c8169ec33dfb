#include "sigscope/hermite.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace sigscope {

namespace {

std::mutex table_mutex;
std::vector<HermitePolynomial> exact_tables;   // exact_tables[n].order == n
std::vector<std::vector<double>> double_tables;

// Extend both caches to order n under the lock; callers hold references to
// vector elements, so reallocation must never invalidate handed-out entries.
// Reserve generously once and refuse beyond (double conversion overflows far
// earlier than this cap anyway).
constexpr int kMaxOrder = 2048;

void extend_tables(int n) {
    if (exact_tables.empty()) {
        exact_tables.reserve(kMaxOrder + 1);
        double_tables.reserve(kMaxOrder + 1);
        exact_tables.push_back({0, {BigInt(1)}});
        double_tables.push_back({1.0});
        exact_tables.push_back({1, {BigInt(1)}});
        double_tables.push_back({1.0});
    }
    while (static_cast<int>(exact_tables.size()) <= n) {
        const int m = static_cast<int>(exact_tables.size()) - 1;  // building order m+1
        const auto& cur = exact_tables[m].coeffs;
        const auto& prev = exact_tables[m - 1].coeffs;
        HermitePolynomial next;
        next.order = m + 1;
        next.coeffs.resize((m + 1) / 2 + 1);
        for (std::size_t k = 0; k < next.coeffs.size(); ++k) {
            BigInt v = k < cur.size() ? cur[k] : BigInt(0);
            if (k >= 1 && k - 1 < prev.size()) v -= m * prev[k - 1];
            next.coeffs[k] = std::move(v);
        }
        std::vector<double> dbl(next.coeffs.size());
        for (std::size_t k = 0; k < dbl.size(); ++k)
            dbl[k] = next.coeffs[k].convert_to<double>();
        exact_tables.push_back(std::move(next));
        double_tables.push_back(std::move(dbl));
    }
}

const std::vector<double>& double_coeffs(int n) {
    std::lock_guard<std::mutex> lock(table_mutex);
    extend_tables(n);
    return double_tables[static_cast<std::size_t>(n)];
}

// cos(phase - n pi/2) with the n pi/2 shift applied exactly via n mod 4.
double shifted_cos(int n, double phase) {
    switch (((n % 4) + 4) % 4) {
        case 0: return std::cos(phase);
        case 1: return std::sin(phase);
        case 2: return -std::cos(phase);
        default: return -std::sin(phase);
    }
}

}

const HermitePolynomial& hermite_coeffs(int n) {
    if (n < 0) throw std::invalid_argument("hermite_coeffs: order must be >= 0");
    if (n > kMaxOrder) throw std::invalid_argument("hermite_coeffs: order beyond supported cap");
    std::lock_guard<std::mutex> lock(table_mutex);
    extend_tables(n);
    return exact_tables[static_cast<std::size_t>(n)];
}

double hermite_eval(int n, double t, double x) {
    if (n < 0) throw std::invalid_argument("hermite_eval: order must be >= 0");
    const std::vector<double>& c = double_coeffs(n);
    // Powers built incrementally; largest exponents stay inside double range
    // for the supported orders and arguments of interest.
    std::vector<double> tpow(c.size());
    tpow[0] = 1.0;
    for (std::size_t k = 1; k < c.size(); ++k) tpow[k] = tpow[k - 1] * t;
    std::vector<double> xpow(static_cast<std::size_t>(n) + 1);
    xpow[0] = 1.0;
    for (std::size_t j = 1; j <= static_cast<std::size_t>(n); ++j) xpow[j] = xpow[j - 1] * x;

    double sum = 0.0, comp = 0.0;  // Neumaier compensation
    for (std::size_t k = 0; k < c.size(); ++k) {
        const double term = c[k] * tpow[k] * xpow[static_cast<std::size_t>(n) - 2 * k];
        const double next = sum + term;
        if (std::abs(sum) >= std::abs(term))
            comp += (sum - next) + term;
        else
            comp += (term - next) + sum;
        sum = next;
    }
    return sum + comp;
}

double ito_iterated_integral(int n, double qv, double x_t) {
    if (qv < 0) throw std::invalid_argument("ito_iterated_integral: qv must be >= 0");
    if (n == 0) return 1.0;
    const double h = hermite_eval(n, qv, x_t);
    if (h == 0.0) return 0.0;
    if (n <= 170) return h / std::tgamma(static_cast<double>(n) + 1.0);
    const double magnitude = std::exp(std::log(std::abs(h)) - std::lgamma(static_cast<double>(n) + 1.0));
    return h > 0 ? magnitude : -magnitude;
}

double hermite_asymptotic(int n, double y) {
    if (n < 1) throw std::invalid_argument("hermite_asymptotic: order must be >= 1");
    const double log_amp = y * y / 4.0 + 0.5 * n * std::log(2.0) +
                           std::lgamma((n + 1) / 2.0) - 0.5 * std::log(M_PI);
    return std::exp(log_amp) * shifted_cos(n, y * std::sqrt(static_cast<double>(n)));
}

bool hermite_cosine_degenerate(int n, double t, double x, double threshold) {
    if (t <= 0) return false;
    return std::abs(shifted_cos(n, x * std::sqrt(n / t))) < threshold;
}

}
