#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "pfgame/expr.hpp"

namespace pfgame {

/// One positive coefficient a_{i1 ... id}; indices are 0-based.
struct TensorEntry {
    std::vector<std::size_t> index;
    double value = 0.0;
};

/// Sparse nonnegative tensor of order d and dimension n. Only positive
/// entries are stored.
struct Tensor {
    std::size_t order = 0;
    std::size_t dim = 0;
    std::vector<TensorEntry> entries;

    /// Throws std::invalid_argument unless every stored value is positive,
    /// every index lies in range, no multi-index repeats, and every row i has
    /// at least one entry.
    void validate() const;
};

/// Set of multi-indices with positive coefficient.
struct TensorPattern {
    std::size_t order = 0;
    std::size_t dim = 0;
    std::vector<std::vector<std::size_t>> entries;

    static TensorPattern of(const Tensor& t);
    void validate() const;
};

/// Reads "tensor d n" followed by lines "i1 ... id value" (1-based indices).
Tensor parse_tensor(std::string_view text);

/// f(x)_i = sum a_{i i2..id} x_{i2} ... x_{id}, for positive x.
std::vector<double> apply_tensor(const Tensor& t, std::span<const double> x);

/// The additive conjugate T = (d-1)^{-1} log o f o exp, flagged Convex.
Operator tensor_to_operator(const Tensor& t);

}  // namespace pfgame
