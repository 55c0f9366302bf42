#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hidiff/ops.hpp"
#include "hidiff/tensor.hpp"

namespace hidiff {

// Fused projections for multi-head self-attention over c channels. Each
// weight matrix is c x c laid out (input dim, output dim); heads must
// divide c.
struct AttentionWeights {
    int heads = 1;
    Matrix wq, wk, wv, wo;
    std::vector<float> bq, bk, bv, bo;
};

AttentionWeights make_attention_weights(int channels, int heads, uint64_t seed,
                                        std::string_view name);

// Per-head attention probabilities on a spatial grid; head_probs[h] is
// (grid_h*grid_w) x (grid_h*grid_w), rows are queries.
struct AttnMap {
    int grid_h = 0;
    int grid_w = 0;
    std::vector<Matrix> head_probs;
};

// Streaming view of attention rows. Implementations must not mutate the row;
// the attention math is identical whether or not a consumer is attached.
struct AttnProbsConsumer {
    virtual ~AttnProbsConsumer() = default;
    virtual void begin(int samples, int heads, int grid_h, int grid_w) = 0;
    virtual void row(int sample, int head, int query, std::span<const float> probs) = 0;
};

// Materializes one AttnMap per sample. Only sensible on small grids; the
// buffer is heads * (h*w)^2 floats per sample.
struct AttnMapCapture : AttnProbsConsumer {
    std::vector<AttnMap> maps;
    void begin(int samples, int heads, int grid_h, int grid_w) override;
    void row(int sample, int head, int query, std::span<const float> probs) override;
};

// Global multi-head self-attention over all h*w tokens of each sample.
// Scale is 1/sqrt(c/heads); the residual is NOT included here, callers add
// their own skip path.
Tensor mhsa_global(const Tensor& x, const AttentionWeights& w,
                   AttnProbsConsumer* probs = nullptr);

struct WindowLayout {
    TensorShape original;
    int wh = 0, ww = 0;      // window extents
    int grid_h = 0, grid_w = 0; // windows per axis
};

// windows holds (n * grid_h * grid_w) samples of shape (c, wh, ww); window
// order is row-major over the grid, outermost over the original samples.
struct WindowStack {
    Tensor windows;
    WindowLayout layout;
};

// Cyclic roll by (-shift_h, -shift_w), then tile. Window extents must divide
// the rolled feature extents.
WindowStack window_partition(const Tensor& x, int wh, int ww, int shift_h, int shift_w);

// Exact inverse of window_partition with the same shift.
Tensor window_merge(const WindowStack& stack, int shift_h, int shift_w);

enum class ShiftPolicy { Cycle, SeededRandom };

struct ShiftSchedule {
    ShiftPolicy policy = ShiftPolicy::Cycle;
    std::vector<std::pair<int, int>> strides; // candidate (shift_h, shift_w)
    uint64_t seed = 0;                        // SeededRandom only
};

// Stride for step i: Cycle walks strides[i mod size]; SeededRandom draws a
// uniform index keyed on (seed, i) so step i always gets the same pick.
std::pair<int, int> shift_stride(int step_index, const ShiftSchedule& schedule);

enum class AttentionMode { Global, Windowed };

struct AttentionConfig {
    AttentionMode mode = AttentionMode::Windowed;
    int heads = 1;
    int window_h = 0, window_w = 0;
    ShiftSchedule schedule;
};

// Shifted-window attention for step i: partition with shift_stride(i), run
// mhsa_global inside each window independently, merge, then add the residual
// x. With window == (h, w) and zero shift this reduces to global attention
// plus the residual.
Tensor msw_msa(const Tensor& x, const AttentionWeights& w, const AttentionConfig& cfg,
               int step_index, AttnProbsConsumer* probs = nullptr);

// Pairwise token interaction count for one attention pass: global is
// (h*w)^2; windowed is (h/wh)*(w/ww) windows of (wh*ww)^2 each.
uint64_t attn_token_pairs(int h, int w, AttentionMode mode, int wh = 0, int ww = 0);

} // namespace hidiff
