// Command-line front end: seeded simulation runs (single, sweeps, presets)
// writing per-cycle CSV plus a summary, and a calculator for the closed-form
// bounds with optional Monte-Carlo validation.

#include <cstdlib>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "slicekit/analysis.hpp"
#include "slicekit/config.hpp"
#include "slicekit/csv.hpp"
#include "slicekit/engine.hpp"
#include "slicekit/montecarlo.hpp"
#include "slicekit/presets.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

struct NamedRun {
    std::string name;
    slicekit::SimConfig config;
};

struct RunFlags {
    std::string config_file;
    std::string preset;
    std::string out_dir;
    std::string seeds_range;
    int jobs = 1;
    double threshold_factor = 2.0;
};

std::string default_out_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("SLICEKIT_OUT_DIR"); env != nullptr && *env != '\0')
        return env;
    return ".";
}

std::vector<std::uint64_t> parse_seed_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos)
        return {static_cast<std::uint64_t>(std::stoull(text))};
    const std::uint64_t first = std::stoull(text.substr(0, dots));
    const std::uint64_t last = std::stoull(text.substr(dots + 2));
    if (last < first) throw std::invalid_argument("seed range runs backwards: " + text);
    if (last - first > 10000) throw std::invalid_argument("seed range too large: " + text);
    std::vector<std::uint64_t> seeds;
    for (std::uint64_t s = first; s <= last; ++s) seeds.push_back(s);
    return seeds;
}

// Summary: headline results first, then the full config echo so the file can
// reproduce the run.
std::string summarize(const std::string& name, const slicekit::SimConfig& cfg,
                      const std::vector<slicekit::CycleMetrics>& metrics,
                      double threshold_factor) {
    const auto& last = metrics.back();
    const double threshold = threshold_factor * last.sdm;
    std::optional<std::uint64_t> cycles_to_threshold;
    for (const auto& m : metrics) {
        if (m.sdm <= threshold) {
            cycles_to_threshold = m.cycle;
            break;
        }
    }
    std::uint64_t messages = 0, unsuccessful = 0;
    for (const auto& m : metrics) {
        messages += m.messages_sent;
        unsuccessful += m.unsuccessful_swaps;
    }

    std::string out;
    out += "name = " + name + "\n";
    out += "final_cycle = " + std::to_string(last.cycle) + "\n";
    if (last.gdm) out += "final_gdm = " + slicekit::format_double(*last.gdm) + "\n";
    out += "final_sdm = " + slicekit::format_double(last.sdm) + "\n";
    out += "threshold_factor = " + slicekit::format_double(threshold_factor) + "\n";
    out += "threshold_value = " + slicekit::format_double(threshold) + "\n";
    out += "cycles_to_threshold = " +
           (cycles_to_threshold ? std::to_string(*cycles_to_threshold) : std::string("none")) +
           "\n";
    out += "messages_total = " + std::to_string(messages) + "\n";
    out += "unsuccessful_total = " + std::to_string(unsuccessful) + "\n";
    out += "live_nodes_final = " + std::to_string(last.live_nodes) + "\n";
    out += slicekit::echo_config(cfg);
    return out;
}

int execute_runs(const std::vector<NamedRun>& runs, const std::string& out_dir, int jobs,
                 double threshold_factor) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) {
        std::cerr << "error: cannot create output directory '" << out_dir << "': " << ec.message()
                  << "\n";
        return kExitRuntime;
    }

    std::vector<std::string> failures(runs.size());
    std::vector<std::string> written(runs.size());
    const auto total = static_cast<std::int64_t>(runs.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs) if (jobs > 1)
    for (std::int64_t i = 0; i < total; ++i) {
        const NamedRun& job = runs[static_cast<std::size_t>(i)];
        try {
            const slicekit::RunResult result = slicekit::run(job.config);
            const std::string base = out_dir + "/" + job.name;
            slicekit::write_text_file(
                base + ".csv",
                slicekit::metrics_to_csv(result.metrics,
                                         slicekit::protocol_name(job.config.protocol)));
            slicekit::write_text_file(
                base + ".summary",
                summarize(job.name, job.config, result.metrics, threshold_factor));
            written[static_cast<std::size_t>(i)] = base + ".csv";
        } catch (const std::exception& e) {
            failures[static_cast<std::size_t>(i)] = e.what();
        }
    }

    int rc = kExitOk;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        if (!failures[i].empty()) {
            std::cerr << "error: run '" << runs[i].name << "' failed: " << failures[i] << "\n";
            rc = kExitRuntime;
        } else {
            std::cout << "wrote " << written[i] << "\n";
        }
    }
    return rc;
}

void print_kv(const std::string& key, const std::string& value) {
    std::cout << key << " = " << value << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"slicekit: deterministic simulator for gossip-based distributed slicing"};
    app.require_subcommand(1);

    // ---- run ----------------------------------------------------------
    auto* run_cmd = app.add_subcommand("run", "execute seeded simulation runs, write CSV");
    RunFlags flags;
    slicekit::SimConfig base;

    run_cmd->add_option("--config", flags.config_file, "flat key = value config file");
    run_cmd->add_option("--preset", flags.preset, "named preset experiment (see --list-presets)");
    bool list_presets = false;
    run_cmd->add_flag("--list-presets", list_presets, "print available presets and exit");
    run_cmd->add_option("--out", flags.out_dir,
                        "output directory (default $SLICEKIT_OUT_DIR or '.')");
    run_cmd->add_option("--seeds", flags.seeds_range, "seed sweep, e.g. 1..10");
    run_cmd->add_option("--jobs", flags.jobs, "parallel workers for independent runs")
        ->check(CLI::Range(1, 256));
    run_cmd->add_option("--threshold-factor", flags.threshold_factor,
                        "summary reports first cycle with SDM <= factor * final SDM");

    std::string opt_protocol, opt_slices, opt_concurrency, opt_sampling, opt_churn_mode,
        opt_attr_dist;
    std::uint64_t opt_n = 0, opt_seed = 0;
    std::uint32_t opt_c = 0, opt_cycles = 0, opt_window = 0, opt_churn_period = 0,
                  opt_churn_first = 0, opt_churn_last = 0;
    double opt_leave = 0.0, opt_join = 0.0;
    auto* o_protocol = run_cmd->add_option("--protocol", opt_protocol,
                                           "jk | mod-jk | ranking | ranking-window");
    auto* o_n = run_cmd->add_option("--n", opt_n, "initial node count");
    auto* o_c = run_cmd->add_option("--c", opt_c, "view size");
    auto* o_slices = run_cmd->add_option("--slices", opt_slices,
                                         "equal slice count or boundary list 0,...,1");
    auto* o_cycles = run_cmd->add_option("--cycles", opt_cycles, "cycles to simulate");
    auto* o_window = run_cmd->add_option("--window-bits", opt_window,
                                         "bit capacity for ranking-window");
    auto* o_concurrency =
        run_cmd->add_option("--concurrency", opt_concurrency, "none | half | full");
    auto* o_sampling = run_cmd->add_option("--sampling", opt_sampling, "views | uniform");
    auto* o_leave = run_cmd->add_option("--churn-leave", opt_leave, "leave fraction per event");
    auto* o_join = run_cmd->add_option("--churn-join", opt_join, "join fraction per event");
    auto* o_period = run_cmd->add_option("--churn-period", opt_churn_period,
                                         "cycles between churn events");
    auto* o_first = run_cmd->add_option("--churn-first", opt_churn_first, "first churn cycle");
    auto* o_last = run_cmd->add_option("--churn-last", opt_churn_last, "last churn cycle");
    auto* o_churn_mode =
        run_cmd->add_option("--churn-mode", opt_churn_mode, "correlated | uniform");
    auto* o_attr =
        run_cmd->add_option("--attr-dist", opt_attr_dist, "uniform:a,b | exponential:r | pareto:s");
    auto* o_seed = run_cmd->add_option("--seed", opt_seed, "RNG seed");

    // ---- bounds -------------------------------------------------------
    auto* bounds_cmd = app.add_subcommand("bounds", "closed-form bound calculators");
    bounds_cmd->require_subcommand(1);
    bool validate = false;
    std::uint64_t trials = 100000;
    std::uint64_t mc_seed = 20260810;

    auto* lemma_cmd = bounds_cmd->add_subcommand(
        "lemma", "slice-population concentration: tail bound and inversion");
    double lemma_p = 0.0, lemma_beta = 0.0, lemma_epsilon = 0.0;
    std::uint64_t lemma_n = 0;
    lemma_cmd->add_option("--n", lemma_n, "node count")->required();
    lemma_cmd->add_option("--p", lemma_p, "slice length in (0,1]")->required();
    lemma_cmd->add_option("--beta", lemma_beta, "relative deviation in (0,1]")->required();
    auto* o_eps = lemma_cmd->add_option("--epsilon", lemma_epsilon,
                                        "also invert: minimal p meeting this epsilon");
    lemma_cmd->add_flag("--validate", validate, "compare against binomial Monte-Carlo");
    lemma_cmd->add_option("--trials", trials, "Monte-Carlo trials");
    lemma_cmd->add_option("--mc-seed", mc_seed, "Monte-Carlo seed");

    auto* samples_cmd =
        bounds_cmd->add_subcommand("samples", "sample count for an exact slice estimate");
    double s_phat = 0.0, s_d = 0.0, s_alpha = 0.0;
    samples_cmd->add_option("--p-hat", s_phat, "rank estimate in (0,1)")->required();
    samples_cmd->add_option("--d", s_d, "distance to the nearest slice boundary")->required();
    samples_cmd->add_option("--alpha", s_alpha, "confidence level complement in (0,1)")
        ->required();
    samples_cmd->add_flag("--validate", validate, "Monte-Carlo check of the confidence");
    samples_cmd->add_option("--trials", trials, "Monte-Carlo trials");
    samples_cmd->add_option("--mc-seed", mc_seed, "Monte-Carlo seed");

    auto* split_cmd =
        bounds_cmd->add_subcommand("split", "probability of a perfectly even two-way split");
    std::uint64_t split_n = 0;
    split_cmd->add_option("--n", split_n, "node count")->required();
    split_cmd->add_flag("--validate", validate, "Monte-Carlo comparison");
    split_cmd->add_option("--trials", trials, "Monte-Carlo trials");
    split_cmd->add_option("--mc-seed", mc_seed, "Monte-Carlo seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (run_cmd->parsed()) {
            if (list_presets) {
                for (const auto& preset : slicekit::presets()) {
                    std::cout << preset.name << ": " << preset.note << "\n";
                    for (const auto& r : preset.runs) std::cout << "  - " << r.name << "\n";
                }
                return kExitOk;
            }
            if (!flags.preset.empty() && !flags.config_file.empty()) {
                std::cerr << "error: --preset and --config are mutually exclusive\n";
                return kExitUsage;
            }

            // Base configs: a preset's run list, or one config from file+defaults.
            std::vector<NamedRun> runs;
            if (!flags.preset.empty()) {
                const slicekit::Preset* preset = slicekit::find_preset(flags.preset);
                if (preset == nullptr) {
                    std::cerr << "error: unknown preset '" << flags.preset << "'\n";
                    return kExitUsage;
                }
                for (const auto& r : preset->runs)
                    runs.push_back({preset->name + "_" + r.name, r.config});
            } else {
                if (!flags.config_file.empty())
                    for (const auto& [key, value] : slicekit::parse_flat_file(flags.config_file))
                        slicekit::apply_config_key(base, key, value);
                runs.push_back({"", base});
            }

            // Explicit flags override file and preset values alike.
            for (auto& job : runs) {
                slicekit::SimConfig& cfg = job.config;
                if (o_protocol->count()) cfg.protocol = slicekit::parse_protocol(opt_protocol);
                if (o_n->count()) cfg.n = opt_n;
                if (o_c->count()) cfg.c = opt_c;
                if (o_slices->count()) cfg.slices = slicekit::parse_slices(opt_slices);
                if (o_cycles->count()) cfg.cycles = opt_cycles;
                if (o_window->count()) cfg.window_bits = opt_window;
                if (o_concurrency->count())
                    cfg.concurrency = slicekit::parse_concurrency(opt_concurrency);
                if (o_sampling->count()) cfg.sampling = slicekit::parse_sampling(opt_sampling);
                if (o_leave->count()) cfg.churn.leave_rate = opt_leave;
                if (o_join->count()) cfg.churn.join_rate = opt_join;
                if (o_period->count()) cfg.churn.event_period = opt_churn_period;
                if (o_first->count()) cfg.churn.first_cycle = opt_churn_first;
                if (o_last->count()) cfg.churn.last_cycle = opt_churn_last;
                if (o_churn_mode->count())
                    cfg.churn.correlation = slicekit::parse_churn_mode(opt_churn_mode);
                if (o_attr->count()) cfg.attr_dist = slicekit::parse_attr_dist(opt_attr_dist);
                if (o_seed->count()) cfg.seed = opt_seed;
            }

            // Seed sweep multiplies every base run.
            std::vector<NamedRun> expanded;
            const std::vector<std::uint64_t> seeds =
                flags.seeds_range.empty() ? std::vector<std::uint64_t>{}
                                          : parse_seed_range(flags.seeds_range);
            for (const auto& job : runs) {
                const std::string stem =
                    job.name.empty() ? slicekit::protocol_name(job.config.protocol) : job.name;
                if (seeds.empty()) {
                    expanded.push_back(
                        {stem + "_seed" + std::to_string(job.config.seed), job.config});
                } else {
                    for (std::uint64_t seed : seeds) {
                        NamedRun sweep{stem + "_seed" + std::to_string(seed), job.config};
                        sweep.config.seed = seed;
                        expanded.push_back(std::move(sweep));
                    }
                }
            }

            for (const auto& job : expanded) job.config.validate();
            return execute_runs(expanded, default_out_dir(flags.out_dir), flags.jobs,
                                flags.threshold_factor);
        }

        if (lemma_cmd->parsed()) {
            const double epsilon = slicekit::chernoff_epsilon(lemma_p, lemma_beta, lemma_n);
            print_kv("n", std::to_string(lemma_n));
            print_kv("p", slicekit::format_double(lemma_p));
            print_kv("beta", slicekit::format_double(lemma_beta));
            print_kv("epsilon_bound", slicekit::format_double(epsilon));
            if (o_eps->count()) {
                const double min_p = slicekit::chernoff_min_p(lemma_epsilon, lemma_beta, lemma_n);
                print_kv("requested_epsilon", slicekit::format_double(lemma_epsilon));
                print_kv("min_p_for_epsilon", slicekit::format_double(min_p));
                print_kv("hypothesis_holds", lemma_p >= min_p ? "yes" : "no");
            }
            if (validate) {
                const auto mc =
                    slicekit::binomial_tail_rate(lemma_n, lemma_p, lemma_beta, trials, mc_seed);
                print_kv("mc_trials", std::to_string(mc.trials));
                print_kv("mc_tail_rate", slicekit::format_double(mc.rate()));
                print_kv("mc_within_bound", mc.rate() <= epsilon ? "yes" : "no");
            }
            return kExitOk;
        }

        if (samples_cmd->parsed()) {
            const std::uint64_t k = slicekit::required_samples(s_phat, s_d, s_alpha);
            print_kv("p_hat", slicekit::format_double(s_phat));
            print_kv("d", slicekit::format_double(s_d));
            print_kv("alpha", slicekit::format_double(s_alpha));
            print_kv("z", slicekit::format_double(slicekit::inverse_normal_cdf(1.0 - s_alpha / 2.0)));
            print_kv("k", std::to_string(k));
            if (k < slicekit::kNormalRegimeMinSamples)
                print_kv("note", "k <= 30 lies outside the normal-approximation regime");
            if (validate && k > 0) {
                const auto mc =
                    slicekit::binomial_tail_rate(k, s_phat, s_d / s_phat, trials, mc_seed);
                print_kv("mc_trials", std::to_string(mc.trials));
                print_kv("mc_confidence", slicekit::format_double(1.0 - mc.rate()));
                print_kv("target_confidence", slicekit::format_double(1.0 - s_alpha));
            }
            return kExitOk;
        }

        if (split_cmd->parsed()) {
            const auto split = slicekit::perfect_split_probability(split_n);
            print_kv("n", std::to_string(split_n));
            print_kv("exact", slicekit::format_double(split.exact));
            print_kv("bound", slicekit::format_double(split.bound));
            print_kv("exact_below_bound", split.exact <= split.bound ? "yes" : "no");
            if (validate) {
                const double rate = slicekit::even_split_rate(split_n, trials, mc_seed);
                print_kv("mc_trials", std::to_string(trials));
                print_kv("mc_rate", slicekit::format_double(rate));
            }
            return kExitOk;
        }
    } catch (const slicekit::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitUsage;
}
