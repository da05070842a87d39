#pragma once

#include <cstdint>
#include <vector>

namespace slicekit {

// One step of the SplitMix64 sequence. Used for seed expansion only.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// xoshiro256** generator. Chosen over std::mt19937_64 because the whole
// pipeline (including the bounded-int and unit-interval mappings below) is
// pinned here, so identical seeds give identical streams on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64(sm);
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
    }

    // Derives an independent stream from (seed, tag, key). Every node gets its
    // own (tag=node, key=id) stream so churn elsewhere never shifts its draws.
    static Rng substream(std::uint64_t seed, std::uint64_t tag, std::uint64_t key = 0) {
        std::uint64_t sm = seed;
        std::uint64_t a = splitmix64(sm);
        sm ^= 0x9E3779B97F4A7C15ULL * (tag + 1);
        std::uint64_t b = splitmix64(sm);
        sm ^= 0xD1B54A32D192ED03ULL * (key + 1);
        std::uint64_t c = splitmix64(sm);
        return Rng(a ^ (b + 0x2545F4914F6CDD1DULL * c));
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform double in (0,1]: 53 random bits, zero mapped to one.
    double uniform01() {
        const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
        return 1.0 - u;
    }

    // Uniform double in [0,1); used for Bernoulli coin flips.
    double uniform_co() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform_co() < p; }

    // Unbiased integer in [0, bound) via Lemire rejection. bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        for (;;) {
            const std::uint64_t x = next();
            const unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
            const std::uint64_t lo = static_cast<std::uint64_t>(m);
            if (lo >= bound || lo >= (-bound) % bound) return static_cast<std::uint64_t>(m >> 64);
        }
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::uint64_t state_[4];
};

// Stream tags for Rng::substream. Engine-level draws (cycle permutation,
// delivery shuffles, churn selection, bootstrap views) live on one stream;
// each node's protocol draws live on its own.
enum StreamTag : std::uint64_t {
    kEngineStream = 1,
    kNodeStream = 2,
    kTrialStream = 3,
};

}  // namespace slicekit
