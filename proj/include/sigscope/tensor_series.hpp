#pragma once

#include <cstddef>
#include <vector>

namespace sigscope {

enum class NormKind { L1, L2 };

// Truncated element of T^N(R^d): one dense coefficient block per level,
// block n holding d^n reals in row-major multi-index order.
class TensorSeries {
public:
    TensorSeries(int dim, int depth);

    static TensorSeries unit(int dim, int depth);

    int dim() const { return dim_; }
    int depth() const { return depth_; }

    std::size_t level_size(int n) const { return offsets_[n + 1] - offsets_[n]; }
    double* level(int n) { return data_.data() + offsets_[n]; }
    const double* level(int n) const { return data_.data() + offsets_[n]; }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

    void set_zero();
    void set_unit();

private:
    int dim_ = 1;
    int depth_ = 0;
    std::vector<std::size_t> offsets_;
    std::vector<double> data_;
};

// Refuses dim^depth above this many coefficients (fail fast instead of OOM).
inline constexpr std::size_t kCoefficientBudget = 100000000;

// Throws std::length_error if dim^depth exceeds the budget.
std::size_t checked_top_block(int dim, int depth);

TensorSeries zero_series(int dim, int depth);

// l1: sum of |c|; l2: Euclidean norm. n must lie in [0, depth].
double level_norm(const TensorSeries& a, int n, NormKind kind);

}
