#include "slicekit/csv.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>

namespace slicekit {

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, ptr);
}

std::string metrics_to_csv(const std::vector<CycleMetrics>& metrics, std::string_view protocol) {
    std::string out;
    out.reserve(metrics.size() * 48 + 64);
    out += kCsvHeader;
    out += '\n';
    for (const auto& m : metrics) {
        out += std::to_string(m.cycle);
        out += ',';
        out += protocol;
        out += ',';
        if (m.gdm) out += format_double(*m.gdm);
        out += ',';
        out += format_double(m.sdm);
        out += ',';
        out += std::to_string(m.messages_sent);
        out += ',';
        out += std::to_string(m.unsuccessful_swaps);
        out += ',';
        out += std::to_string(m.live_nodes);
        out += '\n';
    }
    return out;
}

void write_text_file(const std::string& path, std::string_view content) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open for writing: " + path);
    file.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!file) throw std::runtime_error("write failed: " + path);
}

}  // namespace slicekit
