#pragma once

#include <functional>
#include <vector>

#include "slicekit/core.hpp"
#include "slicekit/metrics.hpp"
#include "slicekit/population.hpp"
#include "slicekit/sampling.hpp"

namespace slicekit {

enum class Protocol { Jk, ModJk, Ranking, RankingWindow };
enum class Concurrency { None, Half, Full };
enum class ChurnCorrelation { AttributeCorrelated, Uniform };

const char* protocol_name(Protocol p);
inline bool protocol_is_ordering(Protocol p) {
    return p == Protocol::Jk || p == Protocol::ModJk;
}

// Churn fires on cycles first_cycle, first_cycle + event_period, ... while
// the cycle lies in [first_cycle, last_cycle]. last_cycle = 0 disables the
// schedule entirely.
struct ChurnSchedule {
    double leave_rate = 0.0;
    double join_rate = 0.0;
    std::uint32_t event_period = 1;
    std::uint32_t first_cycle = 1;
    std::uint32_t last_cycle = 0;
    ChurnCorrelation correlation = ChurnCorrelation::AttributeCorrelated;

    bool due(std::uint32_t cycle) const {
        if (last_cycle == 0 || cycle < first_cycle || cycle > last_cycle) return false;
        if (leave_rate <= 0.0 && join_rate <= 0.0) return false;
        return (cycle - first_cycle) % event_period == 0;
    }
};

// Attribute generator. The protocols treat attribute values as opaque, so the
// distribution only matters for experiments with skew.
struct AttrDist {
    enum class Kind { Uniform, Exponential, Pareto };
    Kind kind = Kind::Uniform;
    double p1 = 0.0;  // uniform: lower; exponential: rate; pareto: shape
    double p2 = 1.0;  // uniform: upper; others: scale

    double sample(Rng& rng) const;
};

struct SimConfig {
    std::uint64_t n = 1000;
    std::uint32_t c = 20;
    SliceSpec slices = SliceSpec::equal(100);
    Protocol protocol = Protocol::ModJk;
    std::uint32_t window_bits = 10000;  // RankingWindow only
    SamplingMode sampling = SamplingMode::CyclonVariant;
    std::uint32_t cycles = 100;
    Concurrency concurrency = Concurrency::None;
    ChurnSchedule churn;
    AttrDist attr_dist;
    std::uint64_t seed = 1;
    int unset_estimate_slice = 1;  // SDM stand-in before a ranking node's first observation

    void validate() const;  // throws std::invalid_argument
};

using CycleHook = std::function<void(const CycleMetrics&, const Population&)>;

struct RunResult {
    std::vector<CycleMetrics> metrics;
    Population population;
};

// Executes the configured simulation: per cycle, churn (when due), then every
// live node in a fresh seeded permutation refreshes its view and runs its
// protocol's active step, then messages held back by the concurrency model
// are delivered in a seeded shuffle, then the observer measures the snapshot.
// Identical configs and seeds give identical metric streams. Throws
// std::runtime_error if churn would shrink the population to the view size.
RunResult run(const SimConfig& cfg, const CycleHook& hook = {});

}  // namespace slicekit
