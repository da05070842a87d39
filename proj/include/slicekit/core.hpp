#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

namespace slicekit {

using NodeId = std::uint64_t;

constexpr int kUnsetSlice = -1;

// Total order over (attribute, id) pairs: i precedes j iff a_i < a_j, or
// a_i == a_j and id_i < id_j. Ids break ties so the order is always strict.
inline bool attribute_less(double a_i, NodeId i, double a_j, NodeId j) {
    return a_i < a_j || (a_i == a_j && i < j);
}

// A partition of (0,1] into adjacent half-open slices (b_{k-1}, b_k].
// Slice indices are 1-based.
class SliceSpec {
public:
    // boundaries must satisfy 0 = b_0 < b_1 < ... < b_m = 1.
    explicit SliceSpec(std::vector<double> boundaries);

    // m slices of equal width 1/m.
    static SliceSpec equal(int count);

    // Returns k such that b_{k-1} < x <= b_k. Throws std::domain_error for
    // x outside (0,1].
    int slice_of(double x) const;

    int count() const { return static_cast<int>(boundaries_.size()) - 1; }
    double lower(int slice) const { return boundaries_[static_cast<std::size_t>(slice) - 1]; }
    double upper(int slice) const { return boundaries_[static_cast<std::size_t>(slice)]; }
    double width(int slice) const { return upper(slice) - lower(slice); }
    const std::vector<double>& boundaries() const { return boundaries_; }

private:
    std::vector<double> boundaries_;
};

// Rank estimates live in [0,1] and a node with nothing below it legitimately
// estimates rank 0, which slice_of does not accept; rank 0 maps to slice 1.
inline int slice_of_estimate(const SliceSpec& spec, double estimate) {
    return estimate <= 0.0 ? 1 : spec.slice_of(estimate);
}

// Attribute-based ranks alpha_i in {1..n} under the (attribute, id) order.
// Throws std::invalid_argument on duplicate ids.
std::unordered_map<NodeId, std::uint32_t>
attribute_ranks(const std::vector<std::pair<NodeId, double>>& population);

// One view slot: neighbor id, cycles since insertion, and the neighbor's
// attribute and advertised value (random value or rank estimate) captured when
// the entry was created. Staleness of rvalue under churn is intended.
struct ViewEntry {
    NodeId id{};
    std::uint32_t age{};
    double attr{};
    double rvalue{};
};

// Bounded neighbor table. Holds no duplicate ids and never the owner's id;
// capacity is enforced by the sampling layer's truncation.
class View {
public:
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    std::vector<ViewEntry>& entries() { return entries_; }
    const std::vector<ViewEntry>& entries() const { return entries_; }

    bool contains(NodeId id) const;
    ViewEntry* find(NodeId id);
    void erase(NodeId id);
    void push(const ViewEntry& e) { entries_.push_back(e); }
    void clear() { entries_.clear(); }

    void age_all();

    // Oldest entry: maximal age, ties broken by smallest id. View must be
    // non-empty.
    const ViewEntry& oldest() const;

    // Keeps the capacity freshest entries (smallest age, ties by smallest id)
    // preserving relative order of the survivors.
    void truncate_freshest(std::uint32_t capacity);

private:
    std::vector<ViewEntry> entries_;
};

}  // namespace slicekit
