#pragma once

#include <vector>

#include "sigscope/tensor_series.hpp"

namespace sigscope {

// a <- a (x) b truncated at the common depth (Chen concatenation product).
// Levels are updated top-down so lower levels of a stay pristine while the
// higher ones still need them. Blocks past the parallel grain are split
// across threads.
void concat_inplace(TensorSeries& a, const TensorSeries& b);

TensorSeries concat(const TensorSeries& a, const TensorSeries& b);

// Signature of one linear segment: level n = increment^(x)n / n!.
// out keeps its dim/depth; increment must hold out.dim() entries.
void tensor_exp_into(TensorSeries& out, const double* increment);

TensorSeries tensor_exp(const std::vector<double>& increment, int depth);

namespace reference {

// Serial textbook versions kept for testing and benchmarking the kernels.
TensorSeries concat(const TensorSeries& a, const TensorSeries& b);
TensorSeries tensor_exp(const std::vector<double>& increment, int depth);

}

}
