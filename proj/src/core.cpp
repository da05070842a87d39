#include "slicekit/core.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace slicekit {

SliceSpec::SliceSpec(std::vector<double> boundaries) : boundaries_(std::move(boundaries)) {
    if (boundaries_.size() < 2 || boundaries_.front() != 0.0 || boundaries_.back() != 1.0)
        throw std::invalid_argument("SliceSpec: boundaries must run from 0 to 1");
    for (std::size_t k = 1; k < boundaries_.size(); ++k)
        if (!(boundaries_[k - 1] < boundaries_[k]))
            throw std::invalid_argument("SliceSpec: boundaries must be strictly increasing");
}

SliceSpec SliceSpec::equal(int count) {
    if (count < 1) throw std::invalid_argument("SliceSpec: need at least one slice");
    std::vector<double> b(static_cast<std::size_t>(count) + 1);
    for (int k = 0; k <= count; ++k) b[static_cast<std::size_t>(k)] = static_cast<double>(k) / count;
    b.back() = 1.0;
    return SliceSpec(std::move(b));
}

int SliceSpec::slice_of(double x) const {
    if (!(x > 0.0) || !(x <= 1.0))
        throw std::domain_error("slice_of: value " + std::to_string(x) + " outside (0,1]");
    // First boundary >= x closes the slice containing x.
    auto it = std::lower_bound(boundaries_.begin() + 1, boundaries_.end(), x);
    return static_cast<int>(it - boundaries_.begin());
}

std::unordered_map<NodeId, std::uint32_t>
attribute_ranks(const std::vector<std::pair<NodeId, double>>& population) {
    std::vector<std::size_t> order(population.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return attribute_less(population[a].second, population[a].first,
                              population[b].second, population[b].first);
    });
    std::unordered_map<NodeId, std::uint32_t> ranks;
    ranks.reserve(population.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        const auto& [id, attr] = population[order[pos]];
        (void)attr;
        auto [it, inserted] = ranks.emplace(id, static_cast<std::uint32_t>(pos + 1));
        if (!inserted) throw std::invalid_argument("attribute_ranks: duplicate node id");
        (void)it;
    }
    return ranks;
}

bool View::contains(NodeId id) const {
    for (const auto& e : entries_)
        if (e.id == id) return true;
    return false;
}

ViewEntry* View::find(NodeId id) {
    for (auto& e : entries_)
        if (e.id == id) return &e;
    return nullptr;
}

void View::erase(NodeId id) {
    for (auto it = entries_.begin(); it != entries_.end(); ++it) {
        if (it->id == id) {
            entries_.erase(it);
            return;
        }
    }
}

void View::age_all() {
    for (auto& e : entries_) ++e.age;
}

const ViewEntry& View::oldest() const {
    const ViewEntry* best = &entries_.front();
    for (const auto& e : entries_)
        if (e.age > best->age || (e.age == best->age && e.id < best->id)) best = &e;
    return *best;
}

void View::truncate_freshest(std::uint32_t capacity) {
    if (entries_.size() <= capacity) return;
    // Rank entries by (age, id); keep the capacity best in place.
    std::vector<std::size_t> order(entries_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::nth_element(order.begin(), order.begin() + capacity, order.end(),
                     [&](std::size_t a, std::size_t b) {
                         const auto& ea = entries_[a];
                         const auto& eb = entries_[b];
                         return ea.age < eb.age || (ea.age == eb.age && ea.id < eb.id);
                     });
    std::vector<bool> keep(entries_.size(), false);
    for (std::size_t i = 0; i < capacity; ++i) keep[order[i]] = true;
    std::vector<ViewEntry> kept;
    kept.reserve(capacity);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (keep[i]) kept.push_back(entries_[i]);
    entries_ = std::move(kept);
}

}  // namespace slicekit
