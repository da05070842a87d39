#pragma once

#include <cstdint>

#include "slicekit/population.hpp"

namespace slicekit {

enum class SamplingMode { CyclonVariant, UniformOracle };

struct ExchangeStats {
    std::uint32_t requests = 0;  // view-exchange requests sent
    std::uint32_t replies = 0;   // view-exchange replies sent
    bool exchanged = false;
};

// Merges a received view into own. Self-pointers are dropped; on an id
// collision the fresher entry wins (smaller age, ties keep local). The result
// is truncated back to capacity, keeping the freshest entries, except that an
// entry matching pinned_id always survives: the exchange peer's fresh
// self-entry must land even when the view is crowded with other age-0 slots.
void merge_view(View& own, NodeId owner, const View& received, std::uint32_t capacity,
                NodeId pinned_id = 0);

// One full view exchange initiated by node i: ages increment, the oldest
// entry names the partner, both sides swap their complete views (the
// initiator substitutes a fresh self-entry for the partner's slot) and merge.
// A departed partner costs the request, removes the stale entry, and skips
// the exchange.
ExchangeStats cyclon_exchange(Population& pop, NodeId initiator, std::uint32_t capacity);

// Idealized sampling oracle: replaces the view with `capacity` distinct live
// nodes drawn uniformly (self excluded, current values, age 0). If fewer
// other nodes exist, the view holds all of them.
void uniform_view(Population& pop, NodeId self, std::uint32_t capacity, Rng& rng);

}  // namespace slicekit
