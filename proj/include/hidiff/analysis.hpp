#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hidiff/attention.hpp"
#include "hidiff/raunet.hpp"
#include "hidiff/tensor.hpp"

namespace hidiff {

// Per-head mean attention distance: for each query, the probability-weighted
// Euclidean distance between query and key grid cells, averaged over queries.
// Rows must be finite, non-negative and sum to 1 within 1e-4.
std::vector<double> mean_attention_distance(const AttnMap& map);

// Streaming equivalent fed one probability row at a time, so a full T x T
// map never has to be materialised. Averages over all samples and queries.
class AttnDistanceAccumulator : public AttnProbsConsumer {
  public:
    void begin(int samples, int heads, int grid_h, int grid_w) override;
    void row(int sample, int head, int query, std::span<const float> probs) override;
    std::vector<double> result() const;
    bool empty() const { return heads_ == 0; }

  private:
    int heads_ = 0, grid_h_ = 0, grid_w_ = 0;
    std::vector<double> sums_;   // one per head
    std::vector<int64_t> rows_;  // rows folded in, per head
};

struct LatencyRow {
    std::string block;
    OpKind kind;
    int calls = 0;
    uint64_t min_ns = 0;       // fastest repeat's total for this row
    uint64_t token_pairs = 0;  // attention work, 0 for other ops
};

struct LatencyReport {
    std::vector<LatencyRow> rows; // in first-appearance order

    uint64_t total_min_ns() const;
    uint64_t total_token_pairs() const;
    std::string to_csv() const;
};

struct ProfileOptions {
    int repeats = 3;
    bool parallel = false; // profile with a single worker unless asked
};

LatencyReport profile_forward(const UNetPlan& plan, const Tensor& x, int step_index,
                              const ProfileOptions& opts);

// Peak normalised cross-correlation between the channel-mean map and its
// half-extent cyclic shifts. 1 means the map repeats itself; a constant map
// scores 0. Result is clamped to [0, 1].
double duplication_score(const Tensor& x, int sample = 0);

// Channel-mean map as an 8-bit binary PGM, min-max scaled; a constant map
// renders mid-grey. Writes are atomic.
void dump_feature_pgm(const std::string& path, const Tensor& x, int sample = 0);

struct PgmImage {
    int width = 0, height = 0;
    std::vector<uint8_t> pixels;
};

PgmImage read_pgm(const std::string& path);

} // namespace hidiff
