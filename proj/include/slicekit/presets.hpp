#pragma once

#include <string>
#include <vector>

#include "slicekit/engine.hpp"

namespace slicekit {

// Canned experiments at desk scale: n = 1000 instead of 10^4, horizons scaled
// to keep each preset under a minute. Every preset's note records how it was
// scaled down.
struct PresetRun {
    std::string name;
    SimConfig config;
};

struct Preset {
    std::string name;
    std::string note;
    std::vector<PresetRun> runs;
};

const std::vector<Preset>& presets();
const Preset* find_preset(const std::string& name);

}  // namespace slicekit
