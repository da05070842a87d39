#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "slicekit/core.hpp"
#include "slicekit/rng.hpp"
#include "slicekit/window.hpp"

namespace slicekit {

// Full per-node state. Which fields a node uses depends on the protocol the
// run executes: the ordering protocols read rvalue as the swapped random
// value; the ranking protocol keeps counters (and possibly a bit window) and
// uses rvalue as the advertised rank estimate. rvalue starts as a random draw
// in (0,1] and, for ranking, is overwritten by every estimate recomputation;
// the initial draw is never used for the node's own slice.
struct Node {
    NodeId id{};
    double attr{};
    double rvalue{};
    int slice_estimate = kUnsetSlice;
    std::uint64_t seen = 0;   // ranking: attribute values encountered (g)
    std::uint64_t below = 0;  // ranking: values <= own attribute (l)
    BitWindow window;
    View view;
    Rng rng{0};

    bool has_estimate() const { return seen > 0; }
    double rank_estimate() const { return static_cast<double>(below) / static_cast<double>(seen); }

    // Records one observation, through the window when enabled so that the
    // counters always mirror the window contents.
    void observe(bool below_bit) {
        if (window.enabled()) {
            window.push(below_bit);
            seen = window.size();
            below = window.ones();
        } else {
            ++seen;
            if (below_bit) ++below;
        }
    }
};

// Live node set. Ids are never reused within a run; iteration always goes
// through the insertion-ordered live list so results do not depend on hash
// layout.
class Population {
public:
    Node& add(Node node) {
        auto [it, inserted] = nodes_.emplace(node.id, std::move(node));
        if (inserted) live_.push_back(it->first);
        return it->second;
    }

    void remove(NodeId id) {
        nodes_.erase(id);
        for (auto it = live_.begin(); it != live_.end(); ++it) {
            if (*it == id) {
                live_.erase(it);
                return;
            }
        }
    }

    bool alive(NodeId id) const { return nodes_.count(id) != 0; }

    Node* find(NodeId id) {
        auto it = nodes_.find(id);
        return it == nodes_.end() ? nullptr : &it->second;
    }
    const Node* find(NodeId id) const {
        auto it = nodes_.find(id);
        return it == nodes_.end() ? nullptr : &it->second;
    }

    Node& at(NodeId id) { return nodes_.at(id); }
    const Node& at(NodeId id) const { return nodes_.at(id); }

    const std::vector<NodeId>& live() const { return live_; }
    std::size_t size() const { return live_.size(); }

    double max_attr() const {
        double best = -1e308;
        for (NodeId id : live_) {
            const double a = nodes_.at(id).attr;
            if (a > best) best = a;
        }
        return best;
    }

private:
    std::unordered_map<NodeId, Node> nodes_;
    std::vector<NodeId> live_;
};

}  // namespace slicekit
