#include "elacnn/tensor.hpp"

#include <cmath>
#include <sstream>

namespace elacnn {

std::string shape_to_string(const Shape& shape) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (i) os << ",";
        os << shape[i];
    }
    os << ")";
    return os.str();
}

std::int64_t shape_numel(const Shape& shape) {
    std::int64_t n = 1;
    for (const auto e : shape) n *= e;
    return n;
}

static void validate_shape(const Shape& shape) {
    if (shape.empty() || shape.size() > 4) {
        throw ContractError("tensor shape must have 1 to 4 axes, got " + shape_to_string(shape));
    }
    for (const auto e : shape) {
        if (e < 1) {
            throw ContractError("tensor extents must be >= 1, got " + shape_to_string(shape));
        }
    }
}

Tensor::Tensor(Shape shape) : shape_(std::move(shape)) {
    validate_shape(shape_);
    data_.assign(static_cast<std::size_t>(shape_numel(shape_)), 0.0f);
}

Tensor::Tensor(Shape shape, std::vector<float> values)
    : shape_(std::move(shape)), data_(std::move(values)) {
    validate_shape(shape_);
    if (shape_numel(shape_) != static_cast<std::int64_t>(data_.size())) {
        throw ContractError("tensor data length " + std::to_string(data_.size()) +
                            " does not match shape " + shape_to_string(shape_));
    }
}

Tensor Tensor::reshaped(Shape shape) const {
    validate_shape(shape);
    if (shape_numel(shape) != size()) {
        throw ContractError("cannot reshape " + shape_to_string(shape_) + " to " +
                            shape_to_string(shape));
    }
    return Tensor(std::move(shape), data_);
}

std::int64_t conv_output_extent(std::int64_t input, std::int64_t kernel) {
    if (kernel < 1) throw ContractError("kernel extent must be >= 1");
    if (input < kernel) {
        throw ContractError("input extent " + std::to_string(input) +
                            " smaller than kernel " + std::to_string(kernel));
    }
    return input - kernel + 1;
}

namespace detail {

// Register-resident accumulator tile: the 32-wide inner row stays in vector
// registers across the whole k loop, which is what makes this kernel fast.
// Wider outputs fall back to 32-column tiles; narrower ones to a plain loop.
template <int NT>
static void gemm_tile(const float* a, const float* b, float* c,
                      std::int64_t m, std::int64_t k, std::int64_t n, std::int64_t j0) {
    for (std::int64_t i = 0; i < m; ++i) {
        const float* arow = a + i * k;
        float* crow = c + i * n + j0;
        float acc[NT];
        for (int j = 0; j < NT; ++j) acc[j] = crow[j];
        for (std::int64_t kk = 0; kk < k; ++kk) {
            const float av = arow[kk];
            const float* brow = b + kk * n + j0;
            for (int j = 0; j < NT; ++j) acc[j] = std::fma(av, brow[j], acc[j]);
        }
        for (int j = 0; j < NT; ++j) crow[j] = acc[j];
    }
}

static void gemm_tail(const float* a, const float* b, float* c,
                      std::int64_t m, std::int64_t k, std::int64_t n,
                      std::int64_t j0, std::int64_t jn) {
    for (std::int64_t i = 0; i < m; ++i) {
        const float* arow = a + i * k;
        float* crow = c + i * n;
        for (std::int64_t kk = 0; kk < k; ++kk) {
            const float av = arow[kk];
            const float* brow = b + kk * n;
            for (std::int64_t j = j0; j < j0 + jn; ++j) {
                crow[j] = std::fma(av, brow[j], crow[j]);
            }
        }
    }
}

void gemm_accumulate(const float* a, const float* b, float* c,
                     std::int64_t m, std::int64_t k, std::int64_t n) {
    std::int64_t j = 0;
    for (; j + 32 <= n; j += 32) gemm_tile<32>(a, b, c, m, k, n, j);
    if (j + 16 <= n) { gemm_tile<16>(a, b, c, m, k, n, j); j += 16; }
    if (j + 8 <= n) { gemm_tile<8>(a, b, c, m, k, n, j); j += 8; }
    if (j < n) gemm_tail(a, b, c, m, k, n, j, n - j);
}

}  // namespace detail

Tensor matmul(const Tensor& a, const Tensor& b) {
    if (a.rank() != 2 || b.rank() != 2) {
        throw ContractError("matmul expects rank-2 tensors, got " +
                            shape_to_string(a.shape()) + " and " + shape_to_string(b.shape()));
    }
    if (a.extent(1) != b.extent(0)) {
        throw ContractError("matmul inner extents disagree: " + shape_to_string(a.shape()) +
                            " x " + shape_to_string(b.shape()));
    }
    Tensor c({a.extent(0), b.extent(1)});
    detail::gemm_accumulate(a.data(), b.data(), c.data(), a.extent(0), a.extent(1), b.extent(1));
    return c;
}

}  // namespace elacnn
