#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "slicekit/metrics.hpp"
#include "slicekit/ordering.hpp"

using namespace slicekit;

namespace {

// Independent recomputation: build both sequences explicitly, look indices up
// by search, and sum the quoted formula.
double gdm_oracle(const std::vector<MetricsRow>& rows) {
    std::vector<MetricsRow> by_attr = rows;
    std::sort(by_attr.begin(), by_attr.end(), [](const MetricsRow& a, const MetricsRow& b) {
        return attribute_less(a.attr, a.id, b.attr, b.id);
    });
    std::vector<MetricsRow> by_rvalue = rows;
    std::sort(by_rvalue.begin(), by_rvalue.end(), [](const MetricsRow& a, const MetricsRow& b) {
        return a.rvalue < b.rvalue || (a.rvalue == b.rvalue && a.id < b.id);
    });
    double sum = 0.0;
    for (const auto& row : rows) {
        long alpha = 0, rho = 0;
        for (std::size_t i = 0; i < by_attr.size(); ++i)
            if (by_attr[i].id == row.id) alpha = static_cast<long>(i) + 1;
        for (std::size_t i = 0; i < by_rvalue.size(); ++i)
            if (by_rvalue[i].id == row.id) rho = static_cast<long>(i) + 1;
        sum += static_cast<double>((alpha - rho) * (alpha - rho));
    }
    return sum / static_cast<double>(rows.size());
}

double sdm_oracle(const std::vector<MetricsRow>& rows, const SliceSpec& spec) {
    double sum = 0.0;
    for (const auto& row : rows) {
        std::size_t rank = 0;  // count members at-or-before row in the attribute order
        for (const auto& other : rows)
            if (attribute_less(other.attr, other.id, row.attr, row.id) || other.id == row.id)
                ++rank;
        const int true_slice =
            spec.slice_of(static_cast<double>(rank) / static_cast<double>(rows.size()));
        const int est = row.est_slice == kUnsetSlice ? 1 : row.est_slice;
        const double l = spec.lower(true_slice);
        const double u = spec.upper(true_slice);
        const double lh = spec.lower(est);
        const double uh = spec.upper(est);
        sum += std::abs((u + l) / 2.0 - (uh + lh) / 2.0) / (u - l);
    }
    return sum;
}

std::vector<MetricsRow> random_rows(Rng& rng, std::size_t n, const SliceSpec& spec) {
    std::vector<MetricsRow> rows;
    for (std::size_t i = 0; i < n; ++i) {
        const double rvalue = rng.uniform01();
        rows.push_back(MetricsRow{static_cast<NodeId>(i * 7 + 1), rng.uniform01() * 50.0, rvalue,
                                  spec.slice_of(rvalue)});
    }
    return rows;
}

}  // namespace

TEST_CASE("gdm of a perfectly ordered population is zero") {
    std::vector<MetricsRow> rows;
    for (int i = 0; i < 20; ++i)
        rows.push_back({static_cast<NodeId>(i + 1), static_cast<double>(i), i / 20.0 + 0.01, 1});
    CHECK(gdm(rows) == 0.0);
}

TEST_CASE("gdm of a reversed pair is one") {
    const std::vector<MetricsRow> rows{{1, 1.0, 0.9, 1}, {2, 2.0, 0.1, 1}};
    CHECK(gdm(rows) == doctest::Approx(1.0));
}

TEST_CASE("gdm rejects an empty population") {
    CHECK_THROWS_AS(gdm({}), std::domain_error);
    CHECK_THROWS_AS(gdm_serial({}), std::domain_error);
}

TEST_CASE("gdm matches the explicit-sequence oracle and its serial twin") {
    Rng rng(31);
    const SliceSpec spec = SliceSpec::equal(10);
    for (int trial = 0; trial < 5; ++trial) {
        const auto rows = random_rows(rng, 100, spec);
        const double fast = gdm(rows);
        CHECK(fast == doctest::Approx(gdm_oracle(rows)).epsilon(1e-12));
        CHECK(fast == gdm_serial(rows));  // bitwise: the accumulation is integer
    }
}

TEST_CASE("gdm is zero exactly when the rvalue order matches the attribute order") {
    Rng rng(32);
    const SliceSpec spec = SliceSpec::equal(10);
    for (int trial = 0; trial < 20; ++trial) {
        auto rows = random_rows(rng, 12, spec);
        if (trial % 2 == 0) {
            // Force agreement: sort rvalues into attribute order.
            std::vector<double> rvalues;
            for (const auto& r : rows) rvalues.push_back(r.rvalue);
            std::sort(rvalues.begin(), rvalues.end());
            std::vector<std::size_t> order(rows.size());
            for (std::size_t i = 0; i < rows.size(); ++i) order[i] = i;
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                return attribute_less(rows[a].attr, rows[a].id, rows[b].attr, rows[b].id);
            });
            for (std::size_t pos = 0; pos < order.size(); ++pos)
                rows[order[pos]].rvalue = rvalues[pos];
        }
        bool matches = true;
        for (const auto& a : rows)
            for (const auto& b : rows)
                if (is_misplaced(a.attr, a.rvalue, b.attr, b.rvalue)) matches = false;
        CHECK((gdm(rows) == 0.0) == matches);
    }
}

TEST_CASE("sdm distance for a node two slices off is two") {
    const SliceSpec spec = SliceSpec::equal(4);
    std::vector<MetricsRow> rows;
    // Four nodes, one per slice, everyone correct except the lowest, which
    // believes slice 3.
    rows.push_back({1, 10.0, 0.1, 3});
    rows.push_back({2, 20.0, 0.4, 2});
    rows.push_back({3, 30.0, 0.7, 3});
    rows.push_back({4, 40.0, 1.0, 4});
    CHECK(sdm(rows, spec) == doctest::Approx(2.0));
}

TEST_CASE("sdm is zero when every estimate is right") {
    Rng rng(33);
    const SliceSpec spec = SliceSpec::equal(5);
    std::vector<MetricsRow> rows;
    for (int i = 0; i < 25; ++i) {
        rows.push_back({static_cast<NodeId>(i + 1), rng.uniform01(), 0.0, 0});
    }
    std::vector<std::size_t> order(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return attribute_less(rows[a].attr, rows[a].id, rows[b].attr, rows[b].id);
    });
    for (std::size_t pos = 0; pos < order.size(); ++pos)
        rows[order[pos]].est_slice =
            spec.slice_of(static_cast<double>(pos + 1) / static_cast<double>(rows.size()));
    CHECK(sdm(rows, spec) == 0.0);
}

TEST_CASE("one off-by-one node in two slices scores one") {
    const SliceSpec spec = SliceSpec::equal(2);
    std::vector<MetricsRow> rows;
    for (int i = 0; i < 10; ++i) {
        const int true_slice = i < 5 ? 1 : 2;
        rows.push_back({static_cast<NodeId>(i + 1), static_cast<double>(i), 0.0, true_slice});
    }
    rows[0].est_slice = 2;
    CHECK(sdm(rows, spec) == doctest::Approx(1.0));
}

TEST_CASE("sdm handles unequal widths through the general formula") {
    const SliceSpec spec(std::vector<double>{0.0, 0.1, 0.55, 1.0});
    // Two nodes: ranks 1/2 and 2/2 -> normalized 0.5 (slice 2) and 1.0
    // (slice 3). First node claims slice 3.
    std::vector<MetricsRow> rows{{1, 1.0, 0.0, 3}, {2, 2.0, 0.0, 3}};
    // True slice 2 has width 0.45 and center 0.325; claimed slice 3 has
    // center 0.775: |0.325-0.775| / 0.45 = 1.0.
    CHECK(sdm(rows, spec) == doctest::Approx(1.0));
    CHECK(sdm(rows, spec) == doctest::Approx(sdm_oracle(rows, spec)));
}

TEST_CASE("sdm matches the formula oracle, its serial twin, and id relabeling") {
    Rng rng(34);
    const SliceSpec spec = SliceSpec::equal(10);
    for (int trial = 0; trial < 5; ++trial) {
        auto rows = random_rows(rng, 60, spec);
        for (auto& r : rows)
            r.est_slice = std::max(1, std::min(10, r.est_slice + static_cast<int>(rng.below(3)) - 1));
        const double value = sdm(rows, spec);
        CHECK(value == doctest::Approx(sdm_oracle(rows, spec)).epsilon(1e-12));
        CHECK(value == sdm_serial(rows, spec));

        std::vector<MetricsRow> relabeled = rows;
        for (auto& r : relabeled) r.id += 1000;
        CHECK(sdm(relabeled, spec) == doctest::Approx(value).epsilon(1e-12));
    }
}

TEST_CASE("ldm of a consistent neighborhood is zero") {
    Node self;
    self.id = 1;
    self.attr = 10.0;
    self.rvalue = 0.1;
    self.view.push({2, 0, 20.0, 0.2});
    self.view.push({3, 0, 30.0, 0.3});
    CHECK(ldm(self, 2) == 0.0);
}

TEST_CASE("ldm of one transposition in a 3-member neighborhood is two thirds") {
    Node self;
    self.id = 1;
    self.attr = 10.0;
    self.rvalue = 0.25;
    self.view.push({2, 0, 20.0, 0.15});  // transposed with self
    self.view.push({3, 0, 30.0, 0.9});
    CHECK(ldm(self, 2) == doctest::Approx(2.0 / 3.0));
}
