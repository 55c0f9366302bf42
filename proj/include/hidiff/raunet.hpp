#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hidiff/attention.hpp"
#include "hidiff/ops.hpp"
#include "hidiff/tensor.hpp"
#include "hidiff/weight_io.hpp"

namespace hidiff {

// Width of the sinusoidal step embedding and of the shared time MLP.
inline constexpr int kTimeEmbedDim = 128;
inline constexpr float kNormEps = 1e-5f;

enum class PlanVariant { Vanilla, RAUNet, ProgressiveRAUNet };
const char* variant_name(PlanVariant v);

enum class RADKind { ReparamConv, ConvThenPool };

// All learnable state, keyed by block path ("down1.res0.conv1", "mid.attn",
// ...). Every plan variant resolves against the same store; the aggressive
// plans only re-parameterize how a conv is executed, never which weights it
// reads.
struct ParameterStore {
    std::map<std::string, ConvWeights> convs;
    std::map<std::string, AttentionWeights> attns;
    std::map<std::string, NormAffine> norms;

    const ConvWeights& conv(const std::string& key) const;
    const AttentionWeights& attn(const std::string& key) const;
    const NormAffine& norm(const std::string& key) const;
    bool has(const std::string& key) const;

    // Sorted union of all block-path keys.
    std::vector<std::string> keys() const;

    // Flat named tensors, sorted by name, for the weight container.
    std::vector<NamedTensor> to_named() const;
    static ParameterStore from_named(const std::vector<NamedTensor>& tensors);
};

ParameterStore load_store(const std::string& path);
void save_store(const std::string& path, const ParameterStore& store);

struct UNetConfig {
    int base_res = 64;   // feature extent the plan aligns its deep levels to
    int input_res = 64;  // extent entering the plan
    int in_channels = 4;
    int depth = 4;
    std::vector<int> channels;       // width per level, size == depth
    int resnet_layers = 2;           // ResNet sub-blocks per level
    std::vector<bool> transformer;   // attention sub-block per level
    bool mid_attention = true;
    int rad_placement = 1;           // 1-based level owning the swapped sampler pair
    int alpha = 4;                   // downsample factor at the swap
    int beta = 4;                    // upsample factor at the swap
    RADKind rad_kind = RADKind::ReparamConv;
    AttentionConfig attention;
    std::vector<int> msw_levels;     // levels running windowed attention
};

// Static, store-independent invariants. Throws InvalidSpec listing every
// violation.
void validate_unet_config(const UNetConfig& cfg);

// Visits every parameter key the topology defines, with its shape info.
// Deliberately variant-independent: all plans share one key set.
struct ParamVisitor {
    std::function<void(const std::string& key, int c_out, int c_in, int k)> conv;
    std::function<void(const std::string& key, int channels)> attn;
    std::function<void(const std::string& key, int channels)> norm;
};
void walk_parameters(const UNetConfig& cfg, const ParamVisitor& v);

// Fresh store for the topology: conv and projection weights uniform in
// [-1/sqrt(fan_in), +1/sqrt(fan_in)] from per-tensor counter streams, norm
// affines at identity. Same (cfg, seed) always yields identical bits.
ParameterStore init_parameters(const UNetConfig& cfg, uint64_t seed);

// Threshold-switched variant selection over sampling step i (i = 0 is the
// noisiest step). Two-phase with t1 only: aggressive early, vanilla late.
// Three-phase with t2: most aggressive, then intermediate, then vanilla.
struct SwitchConfig {
    int t1 = 0;
    std::optional<int> t2;
};
PlanVariant select_variant(int step_index, const SwitchConfig& sw);

enum class OpKind { Conv, SelfAttn, Norm, Interp, Pool, LinearOther };
const char* op_kind_name(OpKind k);

struct OpRecord {
    std::string block;
    OpKind kind = OpKind::Conv;
    uint64_t ns = 0;
    uint64_t token_pairs = 0; // self_attn only
};

// Optional instrumentation. Attaching hooks never changes numerics: the
// profiler only reads timestamps and the attention consumer only observes
// probability rows that are computed anyway.
struct ForwardHooks {
    std::function<void(const OpRecord&)> on_op;
    std::function<AttnProbsConsumer*(const std::string& site)> attn_consumer;
    std::function<void(const std::string& block, const Tensor& t)> on_block_output;
};

// How one sampler site executes under a given plan.
struct SamplerExec {
    enum class Kind { VanillaDown, RADReparam, RADConvPool, VanillaUp, RAU };
    Kind kind = Kind::VanillaDown;
    int factor = 2;    // total extent change
    ConvSpec spec;     // conv actually run
};

struct UNetPlan {
    PlanVariant variant = PlanVariant::Vanilla;
    UNetConfig cfg;
    const ParameterStore* store = nullptr;
    std::vector<int> level_extents;        // entering extent per level (1-based order)
    int mid_extent = 0;
    std::vector<SamplerExec> down_samplers; // index l-1 for level l, size depth-1
    std::vector<SamplerExec> up_samplers;
    std::vector<std::string> keys;          // sorted keys the plan resolves
};

// Resolves the execution plan for one variant against a store. Throws
// PlanError when the topology cannot be built (extent misalignment, window
// or group-width violations) and MissingParameter when the store lacks keys.
UNetPlan build_plan(const UNetConfig& cfg, PlanVariant variant, const ParameterStore& store);

// Noise prediction pass. x is (n, in_channels, input_res, input_res); cond,
// when present, must have kTimeEmbedDim entries and is added to the step
// embedding. Output shape equals input shape.
Tensor forward(const UNetPlan& plan, const Tensor& x, int step_index,
               const std::vector<float>* cond = nullptr, ForwardHooks* hooks = nullptr);

// Resolution-aware downsampler: reduces both extents by exactly alpha while
// reusing the vanilla downsampler's 3x3 weights. ReparamConv runs one conv
// with stride alpha and padding/dilation alpha/2; ConvThenPool runs the
// vanilla stride-2 conv then average-pools the remaining alpha/2 factor.
Tensor rad(const Tensor& x, int alpha, RADKind kind, const ConvWeights& w);

// Resolution-aware upsampler: bilinear interp by beta, then the vanilla 3x3
// stride-1 conv. beta == 2 is exactly the vanilla upsampler.
Tensor rau(const Tensor& x, int beta, const ConvWeights& w);

} // namespace hidiff
