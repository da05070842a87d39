#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "slicekit/engine.hpp"

namespace slicekit {

// Flat `key = value` config text: UTF-8, one pair per line, '#' comments,
// blank lines ignored. Every key mirrors a CLI flag.
struct ConfigError : std::runtime_error {
    ConfigError(const std::string& file, int line, const std::string& what)
        : std::runtime_error(file + ":" + std::to_string(line) + ": " + what), line_number(line) {}
    int line_number;
};

std::vector<std::pair<std::string, std::string>> parse_flat_file(const std::string& path);

// Applies one key. Throws std::invalid_argument on unknown keys or bad values.
void apply_config_key(SimConfig& cfg, const std::string& key, const std::string& value);

// The full config as flat text, suitable for re-reading.
std::string echo_config(const SimConfig& cfg);

// Enum spellings shared by flags, config files and CSV output.
Protocol parse_protocol(const std::string& s);
Concurrency parse_concurrency(const std::string& s);
SamplingMode parse_sampling(const std::string& s);
ChurnCorrelation parse_churn_mode(const std::string& s);
const char* concurrency_name(Concurrency c);
const char* sampling_name(SamplingMode m);
const char* churn_mode_name(ChurnCorrelation m);

// "100" -> 100 equal slices; "0,0.2,0.7,1" -> explicit boundaries.
SliceSpec parse_slices(const std::string& s);
std::string slices_to_string(const SliceSpec& spec);

// "uniform:0,1" | "exponential:1" | "pareto:1.5,1"; parameters optional.
AttrDist parse_attr_dist(const std::string& s);
std::string attr_dist_to_string(const AttrDist& d);

}  // namespace slicekit
