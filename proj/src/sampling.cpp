#include "slicekit/sampling.hpp"

#include <algorithm>

namespace slicekit {

void merge_view(View& own, NodeId owner, const View& received, std::uint32_t capacity,
                NodeId pinned_id) {
    for (const auto& e : received.entries()) {
        if (e.id == owner) continue;
        if (ViewEntry* local = own.find(e.id)) {
            if (e.age < local->age) *local = e;
            continue;
        }
        own.push(e);
    }
    if (own.size() <= capacity) return;
    if (pinned_id != 0 && own.contains(pinned_id)) {
        const ViewEntry pinned = *own.find(pinned_id);
        own.erase(pinned_id);
        own.truncate_freshest(capacity - 1);
        own.push(pinned);
    } else {
        own.truncate_freshest(capacity);
    }
}

ExchangeStats cyclon_exchange(Population& pop, NodeId initiator, std::uint32_t capacity) {
    ExchangeStats stats;
    Node& a = pop.at(initiator);
    if (a.view.empty()) return stats;

    a.view.age_all();
    const NodeId partner = a.view.oldest().id;
    stats.requests = 1;

    Node* b = pop.find(partner);
    if (b == nullptr) {
        // Stale pointer at a departed node: the exchange dies and the entry
        // goes with it.
        a.view.erase(partner);
        return stats;
    }

    View sent = a.view;
    sent.erase(partner);
    sent.push(ViewEntry{a.id, 0, a.attr, a.rvalue});

    View reply = b->view;  // captured before the partner merges
    stats.replies = 1;

    merge_view(b->view, b->id, sent, capacity, a.id);
    merge_view(a.view, a.id, reply, capacity);
    stats.exchanged = true;
    return stats;
}

void uniform_view(Population& pop, NodeId self, std::uint32_t capacity, Rng& rng) {
    Node& node = pop.at(self);
    node.view.clear();

    const auto& live = pop.live();
    std::vector<NodeId> others;
    others.reserve(live.size());
    for (NodeId id : live)
        if (id != self) others.push_back(id);

    const std::size_t take = std::min<std::size_t>(capacity, others.size());
    // Partial Fisher-Yates: the first `take` slots end up a uniform sample
    // without replacement.
    for (std::size_t i = 0; i < take; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.below(others.size() - i));
        std::swap(others[i], others[j]);
        const Node& peer = pop.at(others[i]);
        node.view.push(ViewEntry{peer.id, 0, peer.attr, peer.rvalue});
    }
}

}  // namespace slicekit
