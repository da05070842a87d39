#pragma once

#include <cstdint>
#include <optional>

#include "slicekit/population.hpp"

namespace slicekit {

// Interior slice boundary nearest to x. Boundaries 0 and 1 are excluded as
// targets: no estimate can sit beyond them, so biasing traffic toward them
// buys nothing. Empty when the spec has a single slice.
std::optional<double> nearest_interior_boundary(const SliceSpec& spec, double x);

// Targets of one active step: the neighbor whose advertised estimate lies
// closest to the owner's nearest boundary, plus one uniformly random
// neighbor (the two may coincide).
struct RankingTargets {
    NodeId biased{};
    NodeId random{};
};

// Runs the active-step view scan: every neighbor counts as one observation
// (below-bit when its attribute is <= the owner's) and the two message
// targets are chosen. Distance ties go to the smaller id. Returns nothing on
// an empty view (the step is skipped).
std::optional<RankingTargets> ranking_active_scan(Node& node, const SliceSpec& spec, Rng& rng);

// Recomputes rank and slice estimates from the counters (estimate 0 clamps to
// slice 1). No-op while the node has observed nothing.
void ranking_refresh_estimate(Node& node, const SliceSpec& spec);

// Passive side of an update message carrying the sender's attribute value.
// Every received message counts; nothing is ever discarded as stale.
void ranking_receive(Node& node, double sender_attr, const SliceSpec& spec);

// Sample count needed to pin the slice of an estimate p_hat at confidence
// 1-alpha, given distance d from the estimate to the nearest slice boundary:
// ceil((z * sqrt(p_hat (1-p_hat)) / d)^2) with z the upper alpha/2 normal
// quantile. Throws std::domain_error when d <= 0 (the bound is unbounded on a
// boundary) or when p_hat/alpha leave (0,1).
std::uint64_t required_samples(double p_hat, double d, double alpha);

// Results below this sit outside the normal-approximation regime the sample
// bound relies on.
constexpr std::uint64_t kNormalRegimeMinSamples = 31;

}  // namespace slicekit
