#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "slicekit/metrics.hpp"

namespace slicekit {

// Shortest round-trip decimal form, '.' separator, no locale involvement.
std::string format_double(double value);

inline constexpr std::string_view kCsvHeader =
    "cycle,protocol,gdm,sdm,messages,unsuccessful_swaps,live_nodes";

// One row per cycle, LF line endings, gdm column empty when absent.
std::string metrics_to_csv(const std::vector<CycleMetrics>& metrics, std::string_view protocol);

void write_text_file(const std::string& path, std::string_view content);

}  // namespace slicekit
