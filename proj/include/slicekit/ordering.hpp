#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "slicekit/population.hpp"

namespace slicekit {

enum class OrderingMode { Jk, ModJk };

// The swap trigger: attribute order and random-value order disagree.
inline bool is_misplaced(double a_i, double r_i, double a_j, double r_j) {
    return (a_j - a_i) * (r_j - r_i) < 0.0;
}

// 1-based positions of each member of view-plus-self in the locally sorted
// attribute and random-value sequences (ties broken by id). Member 0 is the
// owner, members 1.. follow view order. The view passed here must carry the
// values the owner is entitled to see at act time: in the cycle model a node
// acts right after refreshing its view, so the engine resolves live
// neighbors' current random values into the scan (staleness enters through
// the message-overlap model, not here).
class LocalIndices {
public:
    LocalIndices(const Node& self, const View& view);

    int attr_index(std::size_t member) const { return attr_idx_[member]; }
    int rank_index(std::size_t member) const { return rank_idx_[member]; }
    std::size_t members() const { return attr_idx_.size(); }

private:
    std::vector<int> attr_idx_;
    std::vector<int> rank_idx_;
};

// Order gain of swapping random values with view member j (1-based member
// index), normalized by capacity+1: the drop in the owner's local disorder.
double swap_gain(const LocalIndices& idx, std::size_t j_member, std::uint32_t capacity);

// Integer gain comparator equivalent to ranking members by swap_gain:
// la_i*lr_j + la_j*lr_i - la_j*lr_j.
std::int64_t gain_comparator(const LocalIndices& idx, std::size_t j_member);

// Partner choice for one active step, over the supplied (resolved) view.
// ModJk scans the view in order keeping the last member whose comparator
// value reaches the running maximum (initially 0); if no member reaches 0 —
// possible when the whole neighborhood is already in matching order — it
// falls back to the plain comparator argmax so a request always goes out. Jk
// picks a uniformly random misplaced neighbor, or a uniformly random neighbor
// when none is misplaced. Empty view yields nothing.
std::optional<NodeId> select_partner(const Node& self, const View& view, OrderingMode mode,
                                     Rng& rng, std::uint32_t capacity);

// Wire payloads of the value-swap exchange. A request snapshots the sender's
// values at send time; the reply always carries the responder's pre-adoption
// value.
struct SwapPayload {
    double attr{};
    double rvalue{};
};

struct SwapReply {
    double rvalue_before{};
    bool adopted = false;
};

// Responder side: re-evaluates the misplacement predicate against its current
// values, adopts the sender's random value only when it holds, and recomputes
// its slice estimate.
SwapReply handle_swap_request(Node& responder, const SwapPayload& req, const SliceSpec& spec);

// Requester side, on receiving the reply: refreshes the partner's view slot,
// re-evaluates the predicate with its own current value, adopts on success.
bool handle_swap_ack(Node& requester, NodeId partner, double partner_attr, double ack_rvalue,
                     const SliceSpec& spec);

}  // namespace slicekit
