#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace slicekit {

// Fixed-capacity FIFO of one-bit observations, packed 64 per word. Each bit
// records whether one observed attribute value was <= the owner's. Once full,
// pushing evicts the oldest bit, so the derived counters depend only on the
// most recent capacity observations.
class BitWindow {
public:
    BitWindow() = default;
    explicit BitWindow(std::uint64_t capacity_bits)
        : capacity_(capacity_bits), words_((capacity_bits + 63) / 64, 0) {}

    bool enabled() const { return capacity_ > 0; }
    std::uint64_t capacity() const { return capacity_; }
    std::uint64_t size() const { return size_; }
    std::uint64_t ones() const { return ones_; }

    // Bytes needed to hold capacity bits (the wire/storage cost of the scheme).
    static constexpr std::uint64_t bytes_for_bits(std::uint64_t bits) { return (bits + 7) / 8; }

    void push(bool bit) {
        if (size_ == capacity_) {
            ones_ -= get(head_);
            set(head_, bit);
            head_ = (head_ + 1) % capacity_;
        } else {
            set((head_ + size_) % capacity_, bit);
            ++size_;
        }
        ones_ += bit ? 1 : 0;
    }

private:
    bool get(std::uint64_t pos) const { return (words_[pos >> 6] >> (pos & 63)) & 1; }
    void set(std::uint64_t pos, bool bit) {
        const std::uint64_t mask = 1ULL << (pos & 63);
        if (bit)
            words_[pos >> 6] |= mask;
        else
            words_[pos >> 6] &= ~mask;
    }

    std::uint64_t capacity_ = 0;
    std::uint64_t head_ = 0;
    std::uint64_t size_ = 0;
    std::uint64_t ones_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace slicekit
