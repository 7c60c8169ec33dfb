#include "sigscope/tensor_series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sigscope {

std::size_t checked_top_block(int dim, int depth) {
    if (dim < 1) throw std::invalid_argument("tensor series: dim must be >= 1");
    if (depth < 0) throw std::invalid_argument("tensor series: depth must be >= 0");
    std::size_t size = 1;
    for (int n = 0; n < depth; ++n) {
        if (size > kCoefficientBudget / static_cast<std::size_t>(dim))
            throw std::length_error("tensor series: dim^depth exceeds coefficient budget (" +
                                    std::to_string(kCoefficientBudget) + ")");
        size *= static_cast<std::size_t>(dim);
    }
    if (size > kCoefficientBudget)
        throw std::length_error("tensor series: dim^depth exceeds coefficient budget (" +
                                std::to_string(kCoefficientBudget) + ")");
    return size;
}

TensorSeries::TensorSeries(int dim, int depth) : dim_(dim), depth_(depth) {
    checked_top_block(dim, depth);
    offsets_.resize(static_cast<std::size_t>(depth) + 2);
    offsets_[0] = 0;
    std::size_t block = 1;
    for (int n = 0; n <= depth; ++n) {
        offsets_[n + 1] = offsets_[n] + block;
        block *= static_cast<std::size_t>(dim);
    }
    data_.assign(offsets_[depth + 1], 0.0);
}

TensorSeries TensorSeries::unit(int dim, int depth) {
    TensorSeries a(dim, depth);
    a.data_[0] = 1.0;
    return a;
}

void TensorSeries::set_zero() {
    std::fill(data_.begin(), data_.end(), 0.0);
}

void TensorSeries::set_unit() {
    set_zero();
    data_[0] = 1.0;
}

TensorSeries zero_series(int dim, int depth) {
    return TensorSeries(dim, depth);
}

double level_norm(const TensorSeries& a, int n, NormKind kind) {
    if (n < 0 || n > a.depth()) throw std::out_of_range("level_norm: level out of range");
    const double* block = a.level(n);
    const std::size_t size = a.level_size(n);
    double acc = 0.0;
    if (kind == NormKind::L1) {
        for (std::size_t i = 0; i < size; ++i) acc += std::abs(block[i]);
        return acc;
    }
    for (std::size_t i = 0; i < size; ++i) acc += block[i] * block[i];
    return std::sqrt(acc);
}

}
