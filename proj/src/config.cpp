#include "slicekit/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "slicekit/csv.hpp"

namespace slicekit {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& s) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("not a number: '" + s + "'");
    }
}

std::uint64_t parse_u64(const std::string& s) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument("not a non-negative integer: '" + s + "'");
    return v;
}

std::vector<double> parse_double_list(const std::string& s) {
    std::vector<double> values;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) values.push_back(parse_double(trim(item)));
    return values;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> parse_flat_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw ConfigError(path, 0, "cannot open config file");
    std::vector<std::pair<std::string, std::string>> pairs;
    std::string line;
    int number = 0;
    while (std::getline(file, line)) {
        ++number;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string text = trim(line);
        if (text.empty()) continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos) throw ConfigError(path, number, "expected key = value");
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));
        if (key.empty()) throw ConfigError(path, number, "empty key");
        pairs.emplace_back(key, value);
    }
    return pairs;
}

Protocol parse_protocol(const std::string& s) {
    if (s == "jk") return Protocol::Jk;
    if (s == "mod-jk") return Protocol::ModJk;
    if (s == "ranking") return Protocol::Ranking;
    if (s == "ranking-window") return Protocol::RankingWindow;
    throw std::invalid_argument("unknown protocol '" + s +
                                "' (jk | mod-jk | ranking | ranking-window)");
}

Concurrency parse_concurrency(const std::string& s) {
    if (s == "none") return Concurrency::None;
    if (s == "half") return Concurrency::Half;
    if (s == "full") return Concurrency::Full;
    throw std::invalid_argument("unknown concurrency '" + s + "' (none | half | full)");
}

SamplingMode parse_sampling(const std::string& s) {
    if (s == "views") return SamplingMode::CyclonVariant;
    if (s == "uniform") return SamplingMode::UniformOracle;
    throw std::invalid_argument("unknown sampling '" + s + "' (views | uniform)");
}

ChurnCorrelation parse_churn_mode(const std::string& s) {
    if (s == "correlated") return ChurnCorrelation::AttributeCorrelated;
    if (s == "uniform") return ChurnCorrelation::Uniform;
    throw std::invalid_argument("unknown churn mode '" + s + "' (correlated | uniform)");
}

const char* concurrency_name(Concurrency c) {
    switch (c) {
        case Concurrency::None: return "none";
        case Concurrency::Half: return "half";
        case Concurrency::Full: return "full";
    }
    return "?";
}

const char* sampling_name(SamplingMode m) {
    return m == SamplingMode::CyclonVariant ? "views" : "uniform";
}

const char* churn_mode_name(ChurnCorrelation m) {
    return m == ChurnCorrelation::AttributeCorrelated ? "correlated" : "uniform";
}

SliceSpec parse_slices(const std::string& s) {
    if (s.find(',') == std::string::npos) {
        const std::uint64_t m = parse_u64(s);
        if (m < 1 || m > 1000000) throw std::invalid_argument("slice count out of range: " + s);
        return SliceSpec::equal(static_cast<int>(m));
    }
    return SliceSpec(parse_double_list(s));
}

std::string slices_to_string(const SliceSpec& spec) {
    // Equal widths round-trip as a bare count.
    const SliceSpec equal = SliceSpec::equal(spec.count());
    if (equal.boundaries() == spec.boundaries()) return std::to_string(spec.count());
    std::string out;
    for (std::size_t i = 0; i < spec.boundaries().size(); ++i) {
        if (i) out += ',';
        out += format_double(spec.boundaries()[i]);
    }
    return out;
}

AttrDist parse_attr_dist(const std::string& s) {
    const auto colon = s.find(':');
    const std::string name = colon == std::string::npos ? s : s.substr(0, colon);
    std::vector<double> params;
    if (colon != std::string::npos) params = parse_double_list(s.substr(colon + 1));

    AttrDist dist;
    if (name == "uniform") {
        dist.kind = AttrDist::Kind::Uniform;
        dist.p1 = params.size() > 0 ? params[0] : 0.0;
        dist.p2 = params.size() > 1 ? params[1] : 1.0;
        if (!(dist.p1 < dist.p2)) throw std::invalid_argument("uniform needs lower < upper");
    } else if (name == "exponential") {
        dist.kind = AttrDist::Kind::Exponential;
        dist.p1 = params.size() > 0 ? params[0] : 1.0;
        dist.p2 = params.size() > 1 ? params[1] : 1.0;
        if (!(dist.p1 > 0.0)) throw std::invalid_argument("exponential needs a positive rate");
    } else if (name == "pareto") {
        dist.kind = AttrDist::Kind::Pareto;
        dist.p1 = params.size() > 0 ? params[0] : 1.5;
        dist.p2 = params.size() > 1 ? params[1] : 1.0;
        if (!(dist.p1 > 0.0) || !(dist.p2 > 0.0))
            throw std::invalid_argument("pareto needs positive shape and scale");
    } else {
        throw std::invalid_argument("unknown attribute distribution '" + name +
                                    "' (uniform | exponential | pareto)");
    }
    return dist;
}

std::string attr_dist_to_string(const AttrDist& d) {
    switch (d.kind) {
        case AttrDist::Kind::Uniform:
            return "uniform:" + format_double(d.p1) + "," + format_double(d.p2);
        case AttrDist::Kind::Exponential:
            return "exponential:" + format_double(d.p1) + "," + format_double(d.p2);
        case AttrDist::Kind::Pareto:
            return "pareto:" + format_double(d.p1) + "," + format_double(d.p2);
    }
    return "?";
}

void apply_config_key(SimConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "n") cfg.n = parse_u64(value);
    else if (key == "c") cfg.c = static_cast<std::uint32_t>(parse_u64(value));
    else if (key == "slices") cfg.slices = parse_slices(value);
    else if (key == "protocol") cfg.protocol = parse_protocol(value);
    else if (key == "window-bits") cfg.window_bits = static_cast<std::uint32_t>(parse_u64(value));
    else if (key == "sampling") cfg.sampling = parse_sampling(value);
    else if (key == "cycles") cfg.cycles = static_cast<std::uint32_t>(parse_u64(value));
    else if (key == "concurrency") cfg.concurrency = parse_concurrency(value);
    else if (key == "churn-leave") cfg.churn.leave_rate = parse_double(value);
    else if (key == "churn-join") cfg.churn.join_rate = parse_double(value);
    else if (key == "churn-period") cfg.churn.event_period = static_cast<std::uint32_t>(parse_u64(value));
    else if (key == "churn-first") cfg.churn.first_cycle = static_cast<std::uint32_t>(parse_u64(value));
    else if (key == "churn-last") cfg.churn.last_cycle = static_cast<std::uint32_t>(parse_u64(value));
    else if (key == "churn-mode") cfg.churn.correlation = parse_churn_mode(value);
    else if (key == "attr-dist") cfg.attr_dist = parse_attr_dist(value);
    else if (key == "seed") cfg.seed = parse_u64(value);
    else if (key == "fallback-slice") cfg.unset_estimate_slice = static_cast<int>(parse_u64(value));
    else throw std::invalid_argument("unknown config key '" + key + "'");
}

std::string echo_config(const SimConfig& cfg) {
    std::string out;
    auto kv = [&out](const std::string& k, const std::string& v) {
        out += k;
        out += " = ";
        out += v;
        out += '\n';
    };
    kv("protocol", protocol_name(cfg.protocol));
    kv("n", std::to_string(cfg.n));
    kv("c", std::to_string(cfg.c));
    kv("slices", slices_to_string(cfg.slices));
    if (cfg.protocol == Protocol::RankingWindow) kv("window-bits", std::to_string(cfg.window_bits));
    kv("sampling", sampling_name(cfg.sampling));
    kv("cycles", std::to_string(cfg.cycles));
    kv("concurrency", concurrency_name(cfg.concurrency));
    kv("churn-leave", format_double(cfg.churn.leave_rate));
    kv("churn-join", format_double(cfg.churn.join_rate));
    kv("churn-period", std::to_string(cfg.churn.event_period));
    kv("churn-first", std::to_string(cfg.churn.first_cycle));
    kv("churn-last", std::to_string(cfg.churn.last_cycle));
    kv("churn-mode", churn_mode_name(cfg.churn.correlation));
    kv("attr-dist", attr_dist_to_string(cfg.attr_dist));
    kv("fallback-slice", std::to_string(cfg.unset_estimate_slice));
    kv("seed", std::to_string(cfg.seed));
    return out;
}

}  // namespace slicekit
