#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace hidiff {

// Shared command-line surface. Every subcommand takes a config; the rest is
// optional and each command documents what it uses.
struct CliOptions {
    std::string config_path;
    std::string weights_path;          // input weights (sample, analyze, bench-unet)
    std::string out_path;              // output file or directory override
    std::optional<uint64_t> seed;      // overrides the config seed
    bool dump_features = false;
    int repeats = 3;                   // benchmark repeats
};

int cmd_gen_weights(const CliOptions& opt);
int cmd_bench_attn(const CliOptions& opt);
int cmd_bench_unet(const CliOptions& opt);
int cmd_sample(const CliOptions& opt);
int cmd_analyze(const CliOptions& opt);

} // namespace hidiff
