#include "slicekit/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "slicekit/ordering.hpp"

namespace slicekit {

namespace {

// Positions (1-based) of each row in the sequence sorted by `less`.
template <typename Less>
std::vector<std::uint32_t> positions(const std::vector<MetricsRow>& rows, Less&& less) {
    std::vector<std::uint32_t> order(rows.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), less);
    std::vector<std::uint32_t> pos(rows.size());
    for (std::uint32_t p = 0; p < order.size(); ++p) pos[order[p]] = p + 1;
    return pos;
}

std::vector<std::uint32_t> attr_positions(const std::vector<MetricsRow>& rows) {
    return positions(rows, [&](std::uint32_t a, std::uint32_t b) {
        return attribute_less(rows[a].attr, rows[a].id, rows[b].attr, rows[b].id);
    });
}

std::vector<std::uint32_t> rvalue_positions(const std::vector<MetricsRow>& rows) {
    return positions(rows, [&](std::uint32_t a, std::uint32_t b) {
        return rows[a].rvalue < rows[b].rvalue ||
               (rows[a].rvalue == rows[b].rvalue && rows[a].id < rows[b].id);
    });
}

}  // namespace

double gdm(const std::vector<MetricsRow>& rows) {
    if (rows.empty()) throw std::domain_error("gdm: empty population");
    const auto alpha = attr_positions(rows);
    const auto rho = rvalue_positions(rows);
    const std::int64_t n = static_cast<std::int64_t>(rows.size());
    std::int64_t sum = 0;
#pragma omp parallel for schedule(static) reduction(+ : sum)
    for (std::int64_t i = 0; i < n; ++i) {
        const std::int64_t d = static_cast<std::int64_t>(alpha[static_cast<std::size_t>(i)]) -
                               static_cast<std::int64_t>(rho[static_cast<std::size_t>(i)]);
        sum += d * d;
    }
    return static_cast<double>(sum) / static_cast<double>(n);
}

double gdm_serial(const std::vector<MetricsRow>& rows) {
    if (rows.empty()) throw std::domain_error("gdm: empty population");
    const auto alpha = attr_positions(rows);
    const auto rho = rvalue_positions(rows);
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::int64_t d =
            static_cast<std::int64_t>(alpha[i]) - static_cast<std::int64_t>(rho[i]);
        sum += d * d;
    }
    return static_cast<double>(sum) / static_cast<double>(rows.size());
}

namespace {

double sdm_contribution(const MetricsRow& row, std::uint32_t rank, std::size_t n,
                        const SliceSpec& spec) {
    const double normalized = static_cast<double>(rank) / static_cast<double>(n);
    const int true_slice = spec.slice_of(normalized);
    const int est_slice = row.est_slice == kUnsetSlice ? 1 : row.est_slice;
    const double true_center = (spec.lower(true_slice) + spec.upper(true_slice)) / 2.0;
    const double est_center = (spec.lower(est_slice) + spec.upper(est_slice)) / 2.0;
    return std::abs(true_center - est_center) / spec.width(true_slice);
}

}  // namespace

double sdm(const std::vector<MetricsRow>& rows, const SliceSpec& spec) {
    const auto alpha = attr_positions(rows);
    const std::int64_t n = static_cast<std::int64_t>(rows.size());
    std::vector<double> contrib(rows.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        contrib[idx] = sdm_contribution(rows[idx], alpha[idx], rows.size(), spec);
    }
    // Serial fold in index order keeps the result independent of thread count.
    double sum = 0.0;
    for (double c : contrib) sum += c;
    return sum;
}

double sdm_serial(const std::vector<MetricsRow>& rows, const SliceSpec& spec) {
    const auto alpha = attr_positions(rows);
    double sum = 0.0;
    for (std::size_t i = 0; i < rows.size(); ++i)
        sum += sdm_contribution(rows[i], alpha[i], rows.size(), spec);
    return sum;
}

double ldm(const Node& node, std::uint32_t capacity) {
    LocalIndices idx(node, node.view);
    double sum = 0.0;
    for (std::size_t m = 0; m < idx.members(); ++m) {
        const double d = idx.attr_index(m) - idx.rank_index(m);
        sum += d * d;
    }
    return sum / (capacity + 1.0);
}

}  // namespace slicekit
