#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "elacnn/errors.hpp"

namespace elacnn {

using Shape = std::vector<std::int64_t>;

std::string shape_to_string(const Shape& shape);

/// Dense row-major float32 array, 1 to 4 axes. The substrate for every
/// activation and parameter in the network.
class Tensor {
public:
    Tensor() = default;

    /// Zero-filled tensor of the given shape.
    explicit Tensor(Shape shape);

    Tensor(Shape shape, std::vector<float> values);

    const Shape& shape() const noexcept { return shape_; }
    std::int64_t rank() const noexcept { return static_cast<std::int64_t>(shape_.size()); }
    std::int64_t extent(std::size_t axis) const { return shape_.at(axis); }
    std::int64_t size() const noexcept { return static_cast<std::int64_t>(data_.size()); }

    float* data() noexcept { return data_.data(); }
    const float* data() const noexcept { return data_.data(); }
    std::vector<float>& values() noexcept { return data_; }
    const std::vector<float>& values() const noexcept { return data_; }

    float& operator[](std::int64_t i) { return data_[static_cast<std::size_t>(i)]; }
    float operator[](std::int64_t i) const { return data_[static_cast<std::size_t>(i)]; }

    float& at(std::int64_t i, std::int64_t j) {
        return data_[static_cast<std::size_t>(i * shape_[1] + j)];
    }
    float at(std::int64_t i, std::int64_t j) const {
        return data_[static_cast<std::size_t>(i * shape_[1] + j)];
    }
    float& at(std::int64_t i, std::int64_t j, std::int64_t k) {
        return data_[static_cast<std::size_t>((i * shape_[1] + j) * shape_[2] + k)];
    }
    float at(std::int64_t i, std::int64_t j, std::int64_t k) const {
        return data_[static_cast<std::size_t>((i * shape_[1] + j) * shape_[2] + k)];
    }

    void fill(float value) { std::fill(data_.begin(), data_.end(), value); }

    /// Same data, new shape. Element count must match.
    Tensor reshaped(Shape shape) const;

    bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }

private:
    Shape shape_;
    std::vector<float> data_;
};

std::int64_t shape_numel(const Shape& shape);

/// Matrix product of rank-2 tensors (m,k) x (k,n) -> (m,n). Accumulation per
/// output element is fused multiply-add in ascending k, independent of any
/// internal tiling, so results are reproducible bit for bit.
Tensor matmul(const Tensor& a, const Tensor& b);

/// Output extent of a valid (unpadded) stride-1 convolution.
std::int64_t conv_output_extent(std::int64_t input, std::int64_t kernel);

namespace detail {

/// c (m x n) += a (m x k) * b (k x n), all row-major raw buffers.
/// Per-element accumulation order is ascending k with fma.
void gemm_accumulate(const float* a, const float* b, float* c,
                     std::int64_t m, std::int64_t k, std::int64_t n);

}  // namespace detail

}  // namespace elacnn
