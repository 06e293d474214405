#pragma once

#include <cstdint>
#include <string>

#include "dcr/instance.hpp"

namespace dcr {

// Sampling is split into fixed-size chunks, one RNG substream per chunk.
// The chunk layout, not the worker count, determines the draws, so a given
// (instance, samples, seed, chunk_size) always yields the same report.
struct SamplerConfig {
    std::uint32_t chunk_size = 1u << 14;
    int max_threads = 0;  // 0: DCR_THREADS env var, else hardware concurrency
    double confidence_level = 0.95;
};

struct EstimateReport {
    double point_estimate;  // successes / samples
    std::uint64_t samples;
    std::uint64_t successes;
    std::uint64_t seed;
    double ci_low;   // Wilson score interval
    double ci_high;
    double confidence_level;
    std::string generator;

    std::string to_json() const;
};

EstimateReport estimate_reliability(const NetworkInstance& instance,
                                    std::uint64_t samples, std::uint64_t seed,
                                    const SamplerConfig& config = {});

}  // namespace dcr
