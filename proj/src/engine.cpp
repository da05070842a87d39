#include "slicekit/engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "slicekit/ordering.hpp"
#include "slicekit/ranking.hpp"

namespace slicekit {

const char* protocol_name(Protocol p) {
    switch (p) {
        case Protocol::Jk: return "jk";
        case Protocol::ModJk: return "mod-jk";
        case Protocol::Ranking: return "ranking";
        case Protocol::RankingWindow: return "ranking-window";
    }
    return "?";
}

double AttrDist::sample(Rng& rng) const {
    switch (kind) {
        case Kind::Uniform: return p1 + (p2 - p1) * rng.uniform01();
        case Kind::Exponential: return -std::log(rng.uniform01()) / p1 * p2;
        case Kind::Pareto: return p2 * std::pow(rng.uniform01(), -1.0 / p1);
    }
    return 0.0;
}

void SimConfig::validate() const {
    if (c < 1) throw std::invalid_argument("config: view size c must be at least 1");
    if (n <= c) throw std::invalid_argument("config: need n > c");
    if (cycles < 1) throw std::invalid_argument("config: need at least one cycle");
    if (churn.leave_rate < 0.0 || churn.leave_rate >= 1.0 || churn.join_rate < 0.0 ||
        churn.join_rate >= 1.0)
        throw std::invalid_argument("config: churn rates must lie in [0,1)");
    if (churn.event_period < 1) throw std::invalid_argument("config: churn period must be >= 1");
    if (protocol == Protocol::RankingWindow && window_bits < 1)
        throw std::invalid_argument("config: window needs a positive bit capacity");
    if (unset_estimate_slice < 1 || unset_estimate_slice > slices.count())
        throw std::invalid_argument("config: fallback slice out of range");
}

namespace {

struct PendingMessage {
    enum class Kind { SwapRequest, Update };
    Kind kind;
    NodeId src = 0;
    NodeId dst = 0;
    SwapPayload payload;  // Update carries attr only
};

struct Counters {
    std::uint64_t messages = 0;
    std::uint64_t unsuccessful = 0;
};

class Simulation {
public:
    explicit Simulation(const SimConfig& cfg)
        : cfg_(cfg), engine_rng_(Rng::substream(cfg.seed, kEngineStream)) {
        for (std::uint64_t i = 0; i < cfg_.n; ++i) pop_.add(make_node());
        for (NodeId id : pop_.live()) uniform_view(pop_, id, cfg_.c, engine_rng_);
    }

    RunResult execute(const CycleHook& hook) {
        RunResult result;
        result.metrics.reserve(cfg_.cycles);
        for (std::uint32_t cycle = 1; cycle <= cfg_.cycles; ++cycle) {
            if (cfg_.churn.due(cycle)) apply_churn();
            counters_ = Counters{};

            std::vector<NodeId> order = pop_.live();
            engine_rng_.shuffle(order);
            for (NodeId id : order) {
                Node& node = pop_.at(id);
                refresh_view(node);
                if (protocol_is_ordering(cfg_.protocol))
                    ordering_step(node);
                else
                    ranking_step(node);
            }
            flush_inflight();

            CycleMetrics row = observe(cycle);
            result.metrics.push_back(row);
            if (hook) hook(row, pop_);
        }
        result.population = std::move(pop_);
        return result;
    }

private:
    Node make_node() {
        Node node;
        node.id = next_id_++;
        node.rng = Rng::substream(cfg_.seed, kNodeStream, node.id);
        node.attr = cfg_.attr_dist.sample(node.rng);
        node.rvalue = node.rng.uniform01();
        if (cfg_.protocol == Protocol::RankingWindow) node.window = BitWindow(cfg_.window_bits);
        return node;
    }

    Node make_joiner() {
        // Correlated churn admits only attributes above everything live, so
        // the attribute draw is an increment over the current maximum.
        Node node;
        node.id = next_id_++;
        node.rng = Rng::substream(cfg_.seed, kNodeStream, node.id);
        if (cfg_.churn.correlation == ChurnCorrelation::AttributeCorrelated)
            node.attr = pop_.max_attr() + node.rng.uniform01();
        else
            node.attr = cfg_.attr_dist.sample(node.rng);
        node.rvalue = node.rng.uniform01();
        if (cfg_.protocol == Protocol::RankingWindow) node.window = BitWindow(cfg_.window_bits);
        return node;
    }

    void apply_churn() {
        const std::size_t base = pop_.size();
        const auto leaves = static_cast<std::size_t>(cfg_.churn.leave_rate * static_cast<double>(base));
        const auto joins = static_cast<std::size_t>(cfg_.churn.join_rate * static_cast<double>(base));

        if (leaves > 0) {
            std::vector<NodeId> victims;
            if (cfg_.churn.correlation == ChurnCorrelation::AttributeCorrelated) {
                victims = pop_.live();
                std::sort(victims.begin(), victims.end(), [&](NodeId a, NodeId b) {
                    return attribute_less(pop_.at(a).attr, a, pop_.at(b).attr, b);
                });
                victims.resize(leaves);
            } else {
                std::vector<NodeId> live = pop_.live();
                for (std::size_t i = 0; i < leaves; ++i) {
                    const std::size_t j = i + static_cast<std::size_t>(engine_rng_.below(live.size() - i));
                    std::swap(live[i], live[j]);
                }
                live.resize(leaves);
                victims = std::move(live);
            }
            for (NodeId id : victims) pop_.remove(id);
        }

        if (pop_.size() <= cfg_.c)
            throw std::runtime_error("churn at cycle left only " + std::to_string(pop_.size()) +
                                     " nodes (view size " + std::to_string(cfg_.c) +
                                     "); population exhausted");

        for (std::size_t j = 0; j < joins; ++j) {
            Node& fresh = pop_.add(make_joiner());
            uniform_view(pop_, fresh.id, cfg_.c, engine_rng_);
        }
    }

    void refresh_view(Node& node) {
        if (cfg_.sampling == SamplingMode::CyclonVariant) {
            const ExchangeStats stats = cyclon_exchange(pop_, node.id, cfg_.c);
            counters_.messages += stats.requests + stats.replies;
        } else {
            uniform_view(pop_, node.id, cfg_.c, node.rng);
        }
    }

    bool overlapping() {
        switch (cfg_.concurrency) {
            case Concurrency::None: return false;
            case Concurrency::Full: return true;
            case Concurrency::Half: return engine_rng_.bernoulli(0.5);
        }
        return false;
    }

    // The cycle model keeps a node's picture of live neighbors current at act
    // time (a node acts right after its view refresh); departed neighbors
    // keep their recorded values. Overlap is introduced later, at delivery.
    View resolved_view(const Node& node) const {
        View resolved = node.view;
        for (auto& e : resolved.entries())
            if (const Node* peer = pop_.find(e.id)) e.rvalue = peer->rvalue;
        return resolved;
    }

    void ordering_step(Node& node) {
        const OrderingMode mode =
            cfg_.protocol == Protocol::Jk ? OrderingMode::Jk : OrderingMode::ModJk;
        const auto partner = select_partner(node, resolved_view(node), mode, node.rng, cfg_.c);
        if (!partner) return;
        ++counters_.messages;  // swap request
        const PendingMessage msg{PendingMessage::Kind::SwapRequest, node.id, *partner,
                                 SwapPayload{node.attr, node.rvalue}};
        if (overlapping())
            inflight_.push_back(msg);
        else
            deliver(msg);
    }

    void ranking_step(Node& node) {
        const auto targets = ranking_active_scan(node, cfg_.slices, node.rng);
        if (!targets) return;
        counters_.messages += 2;
        for (const NodeId dst : {targets->biased, targets->random}) {
            const PendingMessage msg{PendingMessage::Kind::Update, node.id, dst,
                                     SwapPayload{node.attr, 0.0}};
            if (overlapping())
                inflight_.push_back(msg);
            else
                deliver(msg);
        }
        ranking_refresh_estimate(node, cfg_.slices);
    }

    void deliver(const PendingMessage& msg) {
        Node* target = pop_.find(msg.dst);
        if (msg.kind == PendingMessage::Kind::Update) {
            if (target) ranking_receive(*target, msg.payload.attr, cfg_.slices);
            return;
        }
        if (target == nullptr) {
            ++counters_.unsuccessful;  // request into the void
            return;
        }
        const SwapReply reply = handle_swap_request(*target, msg.payload, cfg_.slices);
        ++counters_.messages;  // the reply
        if (!reply.adopted) ++counters_.unsuccessful;
        // The requester cannot depart mid-cycle, and attributes never change,
        // so the live node's attribute equals what the view recorded.
        handle_swap_ack(pop_.at(msg.src), msg.dst, target->attr, reply.rvalue_before, cfg_.slices);
    }

    void flush_inflight() {
        engine_rng_.shuffle(inflight_);
        for (const auto& msg : inflight_) deliver(msg);
        inflight_.clear();
    }

    CycleMetrics observe(std::uint32_t cycle) {
        const bool ordering = protocol_is_ordering(cfg_.protocol);
        rows_.clear();
        rows_.reserve(pop_.size());
        for (NodeId id : pop_.live()) {
            const Node& node = pop_.at(id);
            int est = node.slice_estimate;
            if (est == kUnsetSlice)
                est = ordering ? cfg_.slices.slice_of(node.rvalue) : cfg_.unset_estimate_slice;
            rows_.push_back(MetricsRow{node.id, node.attr, node.rvalue, est});
        }
        CycleMetrics row;
        row.cycle = cycle;
        if (ordering) row.gdm = gdm(rows_);
        row.sdm = sdm(rows_, cfg_.slices);
        row.messages_sent = counters_.messages;
        row.unsuccessful_swaps = counters_.unsuccessful;
        row.live_nodes = pop_.size();
        return row;
    }

    SimConfig cfg_;
    Population pop_;
    Rng engine_rng_;
    NodeId next_id_ = 1;
    Counters counters_;
    std::vector<PendingMessage> inflight_;
    std::vector<MetricsRow> rows_;
};

}  // namespace

RunResult run(const SimConfig& cfg, const CycleHook& hook) {
    cfg.validate();
    Simulation sim(cfg);
    return sim.execute(hook);
}

}  // namespace slicekit
