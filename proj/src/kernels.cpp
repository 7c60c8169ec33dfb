#include "sigscope/kernels.hpp"

#include <cstdint>
#include <stdexcept>

#include "sigscope/parallel.hpp"

namespace sigscope {

namespace {

constexpr std::size_t kParallelGrain = 1 << 14;

void check_compatible(const TensorSeries& a, const TensorSeries& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("concat: dimension mismatch");
    if (a.depth() != b.depth()) throw std::invalid_argument("concat: depth mismatch");
}

}

void concat_inplace(TensorSeries& a, const TensorSeries& b) {
    check_compatible(a, b);
    const int depth = a.depth();
    const double b0 = b.level(0)[0];
    for (int n = depth; n >= 0; --n) {
        double* an = a.level(n);
        const std::size_t an_size = a.level_size(n);
        if (b0 != 1.0) {
            for (std::size_t i = 0; i < an_size; ++i) an[i] *= b0;
        }
        for (int k = 0; k < n; ++k) {
            const double* ak = a.level(k);
            const double* bnk = b.level(n - k);
            const std::int64_t za = static_cast<std::int64_t>(a.level_size(k));
            const std::int64_t zb = static_cast<std::int64_t>(b.level_size(n - k));
#pragma omp parallel for if (za * zb >= static_cast<std::int64_t>(kParallelGrain) && max_threads() > 1)
            for (std::int64_t ia = 0; ia < za; ++ia) {
                const double v = ak[ia];
                if (v == 0.0) continue;
                double* row = an + ia * zb;
                for (std::int64_t ib = 0; ib < zb; ++ib) row[ib] += v * bnk[ib];
            }
        }
    }
}

TensorSeries concat(const TensorSeries& a, const TensorSeries& b) {
    TensorSeries out = a;
    concat_inplace(out, b);
    return out;
}

void tensor_exp_into(TensorSeries& out, const double* increment) {
    const int d = out.dim();
    out.level(0)[0] = 1.0;
    for (int n = 1; n <= out.depth(); ++n) {
        const double* prev = out.level(n - 1);
        double* cur = out.level(n);
        const double inv = 1.0 / n;
        const std::size_t prev_size = out.level_size(n - 1);
        for (std::size_t i = 0; i < prev_size; ++i) {
            const double v = prev[i] * inv;
            double* row = cur + i * static_cast<std::size_t>(d);
            for (int c = 0; c < d; ++c) row[c] = v * increment[c];
        }
    }
}

TensorSeries tensor_exp(const std::vector<double>& increment, int depth) {
    TensorSeries out(static_cast<int>(increment.size()), depth);
    tensor_exp_into(out, increment.data());
    return out;
}

namespace reference {

TensorSeries concat(const TensorSeries& a, const TensorSeries& b) {
    check_compatible(a, b);
    const int d = a.dim();
    TensorSeries out(d, a.depth());
    for (int n = 0; n <= a.depth(); ++n) {
        double* block = out.level(n);
        std::size_t right = 1;
        for (int k = n; k >= 0; --k, right *= static_cast<std::size_t>(d)) {
            const double* ak = a.level(k);
            const double* bnk = b.level(n - k);
            for (std::size_t i = 0; i < out.level_size(n); ++i)
                block[i] += ak[i / right] * bnk[i % right];
        }
    }
    return out;
}

TensorSeries tensor_exp(const std::vector<double>& increment, int depth) {
    const int d = static_cast<int>(increment.size());
    TensorSeries out(d, depth);
    out.level(0)[0] = 1.0;
    double factorial = 1.0;
    for (int n = 1; n <= depth; ++n) {
        factorial *= n;
        double* block = out.level(n);
        for (std::size_t i = 0; i < out.level_size(n); ++i) {
            double prod = 1.0;
            std::size_t rest = i;
            for (int slot = 0; slot < n; ++slot) {
                prod *= increment[rest % static_cast<std::size_t>(d)];
                rest /= static_cast<std::size_t>(d);
            }
            block[i] = prod / factorial;
        }
    }
    return out;
}

}

}
