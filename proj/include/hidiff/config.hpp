#pragma once

#include <cstdint>
#include <string>

#include "hidiff/raunet.hpp"
#include "hidiff/sampler.hpp"

namespace hidiff {

struct SamplerConfig {
    int steps = 50;
    ScheduleKind schedule = ScheduleKind::LinearBeta;
    double guidance = 1.0;
};

// One run description: network topology, attention policy, sampling chain
// and the step thresholds that switch execution plans.
struct RunConfig {
    uint64_t seed = 0;
    std::string output_dir = "out";
    UNetConfig unet;
    SamplerConfig sampler;
    SwitchConfig switching;
};

// Parses and validates a JSON run description. Unknown keys anywhere are an
// error; the exception message lists every offending key path and every
// failed invariant at once.
RunConfig parse_run_config(const std::string& json_text);
RunConfig load_run_config(const std::string& path);

const char* schedule_name(ScheduleKind k);

} // namespace hidiff
