#include "dcr/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include <boost/math/distributions/normal.hpp>
#include <json.hpp>

#include "dcr/structure.hpp"
#include "parallel_util.hpp"

namespace dcr {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t splitmix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Substream c is seeded with the (c+1)-th splitmix64 output from `seed`.
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t chunk) {
    return splitmix64(seed + (chunk + 1) * kGolden);
}

double uniform53(std::mt19937_64& engine) {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

std::uint64_t run_chunk(const NetworkInstance& instance,
                        const std::vector<double>& edge_probability,
                        std::uint64_t seed, std::uint64_t chunk,
                        std::uint64_t sample_count) {
    std::mt19937_64 engine(substream_seed(seed, chunk));
    const std::size_t m = edge_probability.size();
    EdgeStateMask mask(m);
    std::uint64_t successes = 0;
    for (std::uint64_t s = 0; s < sample_count; ++s) {
        for (std::size_t e = 0; e < m; ++e)
            mask.assign(e, uniform53(engine) < edge_probability[e]);
        if (structure_phi(instance, mask)) ++successes;
    }
    return successes;
}

struct WilsonInterval {
    double low;
    double high;
};

WilsonInterval wilson_score(std::uint64_t successes, std::uint64_t samples, double level) {
    const boost::math::normal_distribution<double> normal;
    const double z = boost::math::quantile(normal, 0.5 + level / 2.0);
    const double n = static_cast<double>(samples);
    const double phat = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (phat + z2 / (2.0 * n)) / denom;
    const double half =
        z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
    WilsonInterval ci{center - half, center + half};
    ci.low = std::clamp(std::min(ci.low, phat), 0.0, 1.0);
    ci.high = std::clamp(std::max(ci.high, phat), 0.0, 1.0);
    return ci;
}

}  // namespace

EstimateReport estimate_reliability(const NetworkInstance& instance,
                                    std::uint64_t samples, std::uint64_t seed,
                                    const SamplerConfig& config) {
    if (samples == 0) throw std::invalid_argument("samples must be positive");
    if (config.confidence_level <= 0.0 || config.confidence_level >= 1.0)
        throw std::invalid_argument("confidence level must lie in (0,1)");
    const std::uint64_t chunk_size = std::max<std::uint32_t>(1, config.chunk_size);

    const int m = instance.graph().edge_count();
    std::vector<double> edge_probability(m);
    for (int e = 0; e < m; ++e)
        edge_probability[e] = instance.probability(e).to_double();

    const std::uint64_t chunk_count = (samples + chunk_size - 1) / chunk_size;
    std::vector<std::uint64_t> chunk_successes(chunk_count, 0);
    auto run_chunks = [&](std::uint64_t first, std::uint64_t stride) {
        for (std::uint64_t c = first; c < chunk_count; c += stride) {
            const std::uint64_t begin = c * chunk_size;
            const std::uint64_t count = std::min(chunk_size, samples - begin);
            chunk_successes[c] = run_chunk(instance, edge_probability, seed, c, count);
        }
    };

    const std::uint64_t workers = std::min<std::uint64_t>(
        detail::thread_budget(config.max_threads), chunk_count);
    if (workers <= 1) {
        run_chunks(0, 1);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::uint64_t t = 0; t < workers; ++t)
            pool.emplace_back(run_chunks, t, workers);
        for (std::thread& t : pool) t.join();
    }

    std::uint64_t successes = 0;
    for (std::uint64_t s : chunk_successes) successes += s;

    const WilsonInterval ci = wilson_score(successes, samples, config.confidence_level);
    EstimateReport report;
    report.point_estimate = static_cast<double>(successes) / static_cast<double>(samples);
    report.samples = samples;
    report.successes = successes;
    report.seed = seed;
    report.ci_low = ci.low;
    report.ci_high = ci.high;
    report.confidence_level = config.confidence_level;
    report.generator = "mt19937_64/splitmix64-substreams";
    return report;
}

std::string EstimateReport::to_json() const {
    nlohmann::json j;
    j["estimate"] = point_estimate;
    j["n"] = samples;
    j["successes"] = successes;
    j["seed"] = seed;
    j["ci"] = {ci_low, ci_high};
    j["level"] = confidence_level;
    j["generator"] = generator;
    return j.dump();
}

}  // namespace dcr
