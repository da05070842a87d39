#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "slicekit/core.hpp"
#include "slicekit/population.hpp"

namespace slicekit {

// Per-cycle observer row. gdm is absent for the ranking protocol, which has
// no random sequence to rank.
struct CycleMetrics {
    std::uint64_t cycle = 0;
    std::optional<double> gdm;
    double sdm = 0.0;
    std::uint64_t messages_sent = 0;
    std::uint64_t unsuccessful_swaps = 0;
    std::uint64_t live_nodes = 0;
};

// Omniscient snapshot of one live node, prepared by the engine at cycle end.
struct MetricsRow {
    NodeId id{};
    double attr{};
    double rvalue{};
    int est_slice = kUnsetSlice;
};

// Mean squared distance between each node's attribute rank and its random
// value rank. Throws std::domain_error on an empty population. The default
// version parallelizes the per-node map with OpenMP; the _serial twin is the
// reference implementation. Both produce identical doubles (the accumulation
// is integer).
double gdm(const std::vector<MetricsRow>& rows);
double gdm_serial(const std::vector<MetricsRow>& rows);

// Width-normalized distance between each node's true slice (from its
// attribute rank) and its estimated slice, summed over nodes. Entries with an
// unset estimate count at their fallback slice, which the engine has already
// resolved into est_slice.
double sdm(const std::vector<MetricsRow>& rows, const SliceSpec& spec);
double sdm_serial(const std::vector<MetricsRow>& rows, const SliceSpec& spec);

// Local disorder of a node's neighborhood (view plus self), normalized by
// capacity + 1.
double ldm(const Node& node, std::uint32_t capacity);

}  // namespace slicekit
