#pragma once

#include <span>
#include <vector>

#include "hidiff/tensor.hpp"

namespace hidiff {

struct ConvSpec {
    int kernel = 3;
    int padding = 1;
    int stride = 1;
    int dilation = 1;
};

// Weights for a 2-D convolution: w is (c_out, c_in, k, k), one bias per
// output channel.
struct ConvWeights {
    Tensor w;
    std::vector<float> b;

    int c_out() const { return w.shape.n; }
    int c_in() const { return w.shape.c; }
    int k() const { return w.shape.h; }
};

// floor((in + 2p - d*(k-1) - 1) / s) + 1. Throws InvalidSpec when the spec is
// malformed or the result would be empty.
int conv_out_size(int in_extent, const ConvSpec& spec);

// Cross-correlation with zero padding plus per-channel bias. The reduction
// runs input channel -> kernel row -> kernel column, innermost last, so a
// given (input, weights, spec) triple always produces identical bits.
Tensor conv2d(const Tensor& x, const ConvWeights& weights, const ConvSpec& spec);

enum class InterpMode { Nearest, Bilinear };

// Resize by a positive factor; factor*h and factor*w must land on integers.
// Nearest picks floor(i * in / out). Bilinear samples at half-pixel centers,
// (i + 0.5) * in / out - 0.5, with source coordinates clamped to the edges.
Tensor interp(const Tensor& x, double factor, InterpMode mode);

// Output cell (i, j) averages input rows [floor(i*h/oh), ceil((i+1)*h/oh))
// and the analogous columns. Requires 1 <= out <= in per axis.
Tensor adaptive_avg_pool(const Tensor& x, int out_h, int out_w);

struct NormAffine {
    std::vector<float> gamma;
    std::vector<float> beta;
};

// Normalizes each (sample, channel group) to zero mean / unit variance
// (biased variance) before the per-channel affine. A zero-variance group
// maps to zeros when eps cannot absorb the division.
Tensor group_norm(const Tensor& x, int groups, const NormAffine& affine, float eps);

// Same contract, but normalizes across channels at each (n, y, x) site.
Tensor layer_norm(const Tensor& x, const NormAffine& affine, float eps);

// tokens (T x c_in) * weight (c_in x c_out) + bias. Accumulates over the
// input dimension in ascending order per output element.
Matrix linear(const Matrix& x, const Matrix& weight, const std::vector<float>& bias);

// In place over `v`, numerically stabilized by max subtraction. Empty input
// is an InvalidSpec.
void softmax_inplace(std::span<float> v);
std::vector<float> softmax(const std::vector<float>& v);

} // namespace hidiff
