#include "slicekit/presets.hpp"

namespace slicekit {

namespace {

SimConfig base_config(Protocol protocol, int slices, std::uint32_t cycles, std::uint64_t seed) {
    SimConfig cfg;
    cfg.n = 1000;
    cfg.c = 20;
    cfg.slices = SliceSpec::equal(slices);
    cfg.protocol = protocol;
    cfg.cycles = cycles;
    cfg.seed = seed;
    return cfg;
}

std::vector<Preset> build_presets() {
    std::vector<Preset> out;

    {
        Preset p;
        p.name = "fig4a-desk";
        p.note = "global vs slice disorder on one mod-jk run; 1/10 scale, 100 slices";
        p.runs.push_back({"mod-jk", base_config(Protocol::ModJk, 100, 800, 4001)});
        out.push_back(std::move(p));
    }
    {
        Preset p;
        p.name = "fig4b-desk";
        p.note = "jk vs mod-jk convergence race on shared initial state; 1/10 scale, 10 slices";
        p.runs.push_back({"jk", base_config(Protocol::Jk, 10, 800, 4002)});
        p.runs.push_back({"mod-jk", base_config(Protocol::ModJk, 10, 800, 4002)});
        out.push_back(std::move(p));
    }
    {
        Preset p;
        p.name = "fig4c-desk";
        p.note = "useless-swap volume per concurrency mode, both ordering protocols; 1/10 scale";
        for (Protocol proto : {Protocol::Jk, Protocol::ModJk}) {
            for (Concurrency mode : {Concurrency::None, Concurrency::Half, Concurrency::Full}) {
                SimConfig cfg = base_config(proto, 100, 400, 4003);
                cfg.concurrency = mode;
                std::string name = protocol_name(proto);
                name += "-";
                name += mode == Concurrency::None ? "none"
                        : mode == Concurrency::Half ? "half"
                                                    : "full";
                p.runs.push_back({name, cfg});
            }
        }
        out.push_back(std::move(p));
    }
    {
        Preset p;
        p.name = "fig4d-desk";
        p.note = "mod-jk convergence, atomic vs fully overlapping messages; 1/10 scale";
        SimConfig none = base_config(Protocol::ModJk, 100, 800, 4004);
        SimConfig full = none;
        full.concurrency = Concurrency::Full;
        p.runs.push_back({"mod-jk-none", none});
        p.runs.push_back({"mod-jk-full", full});
        out.push_back(std::move(p));
    }
    {
        Preset p;
        p.name = "fig5a-desk";
        p.note = "static case, ordering floor vs ranking improvement; 1/10 scale, 2000 cycles";
        p.runs.push_back({"mod-jk", base_config(Protocol::ModJk, 100, 2000, 5001)});
        p.runs.push_back({"ranking", base_config(Protocol::Ranking, 100, 2000, 5001)});
        out.push_back(std::move(p));
    }
    {
        Preset p;
        p.name = "fig5b-desk";
        p.note = "ranking on the view protocol vs the uniform sampling oracle; 1/10 scale";
        SimConfig views = base_config(Protocol::Ranking, 100, 800, 5002);
        SimConfig uniform = views;
        uniform.sampling = SamplingMode::UniformOracle;
        p.runs.push_back({"ranking-views", views});
        p.runs.push_back({"ranking-uniform", uniform});
        out.push_back(std::move(p));
    }
    {
        Preset p;
        p.name = "fig5c-desk";
        p.note = "attribute-correlated churn burst, 0.1% per cycle for the first 200 cycles, "
                 "then recovery; 1/10 scale";
        SimConfig ordering = base_config(Protocol::ModJk, 100, 2000, 5003);
        ordering.churn.leave_rate = 0.001;
        ordering.churn.join_rate = 0.001;
        ordering.churn.event_period = 1;
        ordering.churn.first_cycle = 1;
        ordering.churn.last_cycle = 200;
        SimConfig ranking = ordering;
        ranking.protocol = Protocol::Ranking;
        p.runs.push_back({"mod-jk", ordering});
        p.runs.push_back({"ranking", ranking});
        out.push_back(std::move(p));
    }
    {
        Preset p;
        p.name = "fig5d-desk";
        p.note = "regular attribute-correlated churn, 0.1% every 10 cycles; window capacity "
                 "scaled to 2000 bits to match the shorter desk horizon";
        SimConfig ordering = base_config(Protocol::ModJk, 100, 1000, 5004);
        ordering.churn.leave_rate = 0.001;
        ordering.churn.join_rate = 0.001;
        ordering.churn.event_period = 10;
        ordering.churn.first_cycle = 1;
        ordering.churn.last_cycle = 1000;
        SimConfig ranking = ordering;
        ranking.protocol = Protocol::Ranking;
        SimConfig window = ranking;
        window.protocol = Protocol::RankingWindow;
        window.window_bits = 2000;
        p.runs.push_back({"mod-jk", ordering});
        p.runs.push_back({"ranking", ranking});
        p.runs.push_back({"ranking-window", window});
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace

const std::vector<Preset>& presets() {
    static const std::vector<Preset> all = build_presets();
    return all;
}

const Preset* find_preset(const std::string& name) {
    for (const auto& p : presets())
        if (p.name == name) return &p;
    return nullptr;
}

}  // namespace slicekit
