#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "slicekit/config.hpp"
#include "slicekit/csv.hpp"
#include "slicekit/engine.hpp"
#include "slicekit/presets.hpp"

using namespace slicekit;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string temp_config_file(const std::string& content) {
    const std::string path = "slicekit_test_config.tmp";
    std::ofstream f(path, std::ios::binary);
    f << content;
    f.close();
    return path;
}

}  // namespace

TEST_CASE("doubles render shortest round-trip with a dot separator") {
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(1543.0) == "1543");
    CHECK(format_double(2.0 / 3.0) == "0.6666666666666666");
}

TEST_CASE("csv carries the fixed header and blank gdm for ranking") {
    std::vector<CycleMetrics> metrics(2);
    metrics[0].cycle = 1;
    metrics[0].gdm = 3.5;
    metrics[0].sdm = 12.0;
    metrics[0].messages_sent = 40;
    metrics[0].unsuccessful_swaps = 2;
    metrics[0].live_nodes = 10;
    metrics[1].cycle = 2;
    metrics[1].sdm = 11.0;
    metrics[1].messages_sent = 40;
    metrics[1].unsuccessful_swaps = 0;
    metrics[1].live_nodes = 10;

    const std::string csv = metrics_to_csv(metrics, "ranking");
    CHECK(csv ==
          "cycle,protocol,gdm,sdm,messages,unsuccessful_swaps,live_nodes\n"
          "1,ranking,3.5,12,40,2,10\n"
          "2,ranking,,11,40,0,10\n");
}

TEST_CASE("a small run per protocol matches its golden csv byte for byte") {
    for (const char* name : {"mod-jk", "ranking"}) {
        SimConfig cfg;
        cfg.n = 50;
        cfg.c = 5;
        cfg.slices = SliceSpec::equal(10);
        cfg.protocol = parse_protocol(name);
        cfg.cycles = 10;
        cfg.seed = 99;
        const RunResult result = run(cfg);
        const std::string csv = metrics_to_csv(result.metrics, name);
        const std::string golden =
            read_file(std::string(SLICEKIT_GOLDEN_DIR) + "/" + name + "_n50_seed99.csv");
        CHECK(csv == golden);
    }
}

TEST_CASE("flat config files parse, apply, and echo back") {
    const std::string path = temp_config_file(
        "# experiment\n"
        "protocol = ranking-window\n"
        "n = 500\n"
        "c = 10\n"
        "slices = 20\n"
        "window-bits = 2000\n"
        "cycles = 50   # inline comment\n"
        "churn-leave = 0.001\n"
        "churn-join = 0.001\n"
        "churn-period = 10\n"
        "churn-first = 1\n"
        "churn-last = 50\n"
        "churn-mode = correlated\n"
        "attr-dist = exponential:2\n"
        "seed = 31\n");
    SimConfig cfg;
    for (const auto& [key, value] : parse_flat_file(path)) apply_config_key(cfg, key, value);
    std::remove(path.c_str());

    CHECK(cfg.protocol == Protocol::RankingWindow);
    CHECK(cfg.n == 500);
    CHECK(cfg.window_bits == 2000);
    CHECK(cfg.churn.event_period == 10);
    CHECK(cfg.attr_dist.kind == AttrDist::Kind::Exponential);
    CHECK(cfg.seed == 31);
    CHECK_NOTHROW(cfg.validate());

    // The echo is itself valid config text describing the same run.
    const std::string echoed = echo_config(cfg);
    const std::string path2 = temp_config_file(echoed);
    SimConfig reparsed;
    for (const auto& [key, value] : parse_flat_file(path2)) apply_config_key(reparsed, key, value);
    std::remove(path2.c_str());
    CHECK(echo_config(reparsed) == echoed);
}

TEST_CASE("config errors carry line numbers and key names") {
    const std::string path = temp_config_file("n = 100\nbogus line without equals\n");
    try {
        parse_flat_file(path);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.line_number == 2);
    }
    std::remove(path.c_str());

    SimConfig cfg;
    CHECK_THROWS_AS(apply_config_key(cfg, "nonsense", "1"), std::invalid_argument);
    CHECK_THROWS_AS(apply_config_key(cfg, "n", "many"), std::invalid_argument);
    CHECK_THROWS_AS(apply_config_key(cfg, "protocol", "quantum"), std::invalid_argument);
}

TEST_CASE("slice and attribute distribution round-trips") {
    CHECK(parse_slices("100").count() == 100);
    const SliceSpec uneven = parse_slices("0,0.25,1");
    CHECK(uneven.count() == 2);
    CHECK(slices_to_string(uneven) == "0,0.25,1");
    CHECK(slices_to_string(SliceSpec::equal(10)) == "10");
    CHECK_THROWS_AS(parse_slices("0,0.5"), std::invalid_argument);

    const AttrDist pareto = parse_attr_dist("pareto:2.5,3");
    CHECK(pareto.kind == AttrDist::Kind::Pareto);
    CHECK(pareto.p1 == 2.5);
    CHECK(pareto.p2 == 3.0);
    CHECK(attr_dist_to_string(pareto) == "pareto:2.5,3");
    CHECK_THROWS_AS(parse_attr_dist("poisson"), std::invalid_argument);
}

TEST_CASE("presets are well formed") {
    CHECK(presets().size() >= 6);
    for (const auto& preset : presets()) {
        CHECK(!preset.runs.empty());
        for (const auto& run_def : preset.runs) CHECK_NOTHROW(run_def.config.validate());
    }
    const Preset* fig5d = find_preset("fig5d-desk");
    REQUIRE(fig5d != nullptr);
    CHECK(fig5d->runs.size() == 3);
    CHECK(find_preset("fig4b-desk") != nullptr);
    CHECK(find_preset("nope") == nullptr);
}
