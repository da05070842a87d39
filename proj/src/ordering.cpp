#include "slicekit/ordering.hpp"

#include <algorithm>

namespace slicekit {

LocalIndices::LocalIndices(const Node& self, const View& view) {
    struct Member {
        NodeId id;
        double attr;
        double rvalue;
    };
    std::vector<Member> members;
    members.reserve(view.size() + 1);
    members.push_back({self.id, self.attr, self.rvalue});
    for (const auto& e : view.entries()) members.push_back({e.id, e.attr, e.rvalue});

    const std::size_t n = members.size();
    attr_idx_.assign(n, 0);
    rank_idx_.assign(n, 0);

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;

    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return attribute_less(members[a].attr, members[a].id, members[b].attr, members[b].id);
    });
    for (std::size_t pos = 0; pos < n; ++pos) attr_idx_[order[pos]] = static_cast<int>(pos + 1);

    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return members[a].rvalue < members[b].rvalue ||
               (members[a].rvalue == members[b].rvalue && members[a].id < members[b].id);
    });
    for (std::size_t pos = 0; pos < n; ++pos) rank_idx_[order[pos]] = static_cast<int>(pos + 1);
}

double swap_gain(const LocalIndices& idx, std::size_t j_member, std::uint32_t capacity) {
    const double la_i = idx.attr_index(0);
    const double lr_i = idx.rank_index(0);
    const double la_j = idx.attr_index(j_member);
    const double lr_j = idx.rank_index(j_member);
    const double before = (la_i - lr_i) * (la_i - lr_i) + (la_j - lr_j) * (la_j - lr_j);
    const double after = (la_i - lr_j) * (la_i - lr_j) + (la_j - lr_i) * (la_j - lr_i);
    return (before - after) / (capacity + 1.0);
}

std::int64_t gain_comparator(const LocalIndices& idx, std::size_t j_member) {
    const std::int64_t la_i = idx.attr_index(0);
    const std::int64_t lr_i = idx.rank_index(0);
    const std::int64_t la_j = idx.attr_index(j_member);
    const std::int64_t lr_j = idx.rank_index(j_member);
    return la_i * lr_j + la_j * lr_i - la_j * lr_j;
}

std::optional<NodeId> select_partner(const Node& self, const View& view, OrderingMode mode,
                                     Rng& rng, std::uint32_t capacity) {
    (void)capacity;
    const auto& entries = view.entries();
    if (entries.empty()) return std::nullopt;

    if (mode == OrderingMode::Jk) {
        std::vector<std::size_t> misplaced;
        for (std::size_t i = 0; i < entries.size(); ++i)
            if (is_misplaced(self.attr, self.rvalue, entries[i].attr, entries[i].rvalue))
                misplaced.push_back(i);
        if (!misplaced.empty())
            return entries[misplaced[rng.below(misplaced.size())]].id;
        return entries[rng.below(entries.size())].id;
    }

    LocalIndices idx(self, view);
    std::optional<NodeId> chosen;
    std::int64_t gain_max = 0;
    std::int64_t best = 0;
    std::optional<NodeId> argmax;
    for (std::size_t m = 1; m < idx.members(); ++m) {
        const std::int64_t g = gain_comparator(idx, m);
        if (g >= gain_max) {
            gain_max = g;
            chosen = entries[m - 1].id;
        }
        if (!argmax || g >= best) {
            best = g;
            argmax = entries[m - 1].id;
        }
    }
    // The scan can end empty-handed when every comparator value is negative
    // (fully ordered neighborhoods); send to the argmax anyway and let the
    // predicate make it a no-op.
    return chosen ? chosen : argmax;
}

SwapReply handle_swap_request(Node& responder, const SwapPayload& req, const SliceSpec& spec) {
    SwapReply reply;
    reply.rvalue_before = responder.rvalue;
    if (is_misplaced(req.attr, req.rvalue, responder.attr, responder.rvalue)) {
        responder.rvalue = req.rvalue;
        responder.slice_estimate = spec.slice_of(responder.rvalue);
        reply.adopted = true;
    }
    return reply;
}

bool handle_swap_ack(Node& requester, NodeId partner, double partner_attr, double ack_rvalue,
                     const SliceSpec& spec) {
    if (ViewEntry* e = requester.view.find(partner)) e->rvalue = ack_rvalue;
    if (is_misplaced(requester.attr, requester.rvalue, partner_attr, ack_rvalue)) {
        requester.rvalue = ack_rvalue;
        requester.slice_estimate = spec.slice_of(requester.rvalue);
        return true;
    }
    return false;
}

}  // namespace slicekit
