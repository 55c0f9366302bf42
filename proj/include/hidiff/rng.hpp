#pragma once

#include <cstdint>
#include <string_view>

namespace hidiff {

// Counter-based generator: draw i of a stream is a pure function of
// (stream key, i), so any draw can be produced out of order and the
// same (seed, name) pair always yields the same sequence. Weight files
// and sampler noise stay byte-identical across runs because of this.
uint64_t hash_name(std::string_view name);

// splitmix64-style finalizer over key + counter.
uint64_t rng_u64(uint64_t key, uint64_t counter);

struct CounterRng {
    uint64_t key = 0;

    CounterRng() = default;
    explicit CounterRng(uint64_t k) : key(k) {}
    // Stream derived from a seed and a label, e.g. one stream per weight tensor.
    CounterRng(uint64_t seed, std::string_view name);

    uint64_t next_u64(uint64_t counter) const { return rng_u64(key, counter); }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform01(uint64_t counter) const;

    // Uniform in [-bound, +bound].
    float uniform_pm(uint64_t counter, float bound) const;

    // Standard normal via Box-Muller; draw i consumes counters 2i and 2i+1.
    float normal(uint64_t counter) const;
};

} // namespace hidiff
