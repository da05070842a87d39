#include "slicekit/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "slicekit/rng.hpp"

namespace slicekit {

namespace {

constexpr std::uint64_t kChunk = 4096;

// std::binomial_distribution wants a standard engine; seed it off the chunk's
// derived stream so chunk results are independent of scheduling.
std::mt19937_64 chunk_engine(std::uint64_t seed, std::uint64_t salt, std::uint64_t chunk) {
    Rng stream = Rng::substream(seed, kTrialStream + salt, chunk);
    return std::mt19937_64(stream.next());
}

template <typename PerChunk>
void for_each_chunk(std::uint64_t trials, bool parallel, PerChunk&& body) {
    const std::int64_t chunks = static_cast<std::int64_t>((trials + kChunk - 1) / kChunk);
#pragma omp parallel for schedule(static) if (parallel)
    for (std::int64_t c = 0; c < chunks; ++c) {
        const std::uint64_t begin = static_cast<std::uint64_t>(c) * kChunk;
        const std::uint64_t count = std::min<std::uint64_t>(kChunk, trials - begin);
        body(static_cast<std::uint64_t>(c), count);
    }
}

TailResult tail_rate_impl(std::uint64_t n, double p, double beta, std::uint64_t trials,
                          std::uint64_t seed, bool parallel) {
    const double mean = static_cast<double>(n) * p;
    const double lo = (1.0 - beta) * mean;
    const double hi = (1.0 + beta) * mean;
    const std::uint64_t chunks = (trials + kChunk - 1) / kChunk;
    std::vector<std::uint64_t> violations(chunks, 0);

    for_each_chunk(trials, parallel, [&](std::uint64_t chunk, std::uint64_t count) {
        auto engine = chunk_engine(seed, 0, chunk);
        std::binomial_distribution<std::int64_t> binom(static_cast<std::int64_t>(n), p);
        std::uint64_t bad = 0;
        for (std::uint64_t t = 0; t < count; ++t) {
            const double x = static_cast<double>(binom(engine));
            if (x < lo || x > hi) ++bad;
        }
        violations[chunk] = bad;
    });

    TailResult result;
    result.trials = trials;
    for (std::uint64_t v : violations) result.violations += v;
    return result;
}

std::vector<std::uint64_t> histogram_impl(const SliceSpec& spec, double p, std::uint64_t k,
                                          std::uint64_t trials, std::uint64_t seed,
                                          bool parallel) {
    const std::uint64_t chunks = (trials + kChunk - 1) / kChunk;
    const std::size_t slices = static_cast<std::size_t>(spec.count());
    std::vector<std::vector<std::uint64_t>> partial(chunks);

    for_each_chunk(trials, parallel, [&](std::uint64_t chunk, std::uint64_t count) {
        auto engine = chunk_engine(seed, 1, chunk);
        std::binomial_distribution<std::int64_t> binom(static_cast<std::int64_t>(k), p);
        std::vector<std::uint64_t> hist(slices + 1, 0);
        for (std::uint64_t t = 0; t < count; ++t) {
            const double estimate =
                static_cast<double>(binom(engine)) / static_cast<double>(k);
            ++hist[static_cast<std::size_t>(slice_of_estimate(spec, estimate))];
        }
        partial[chunk] = std::move(hist);
    });

    std::vector<std::uint64_t> hist(slices + 1, 0);
    for (const auto& part : partial)
        for (std::size_t s = 0; s < part.size(); ++s) hist[s] += part[s];
    return hist;
}

}  // namespace

TailResult binomial_tail_rate(std::uint64_t n, double p, double beta, std::uint64_t trials,
                              std::uint64_t seed) {
    return tail_rate_impl(n, p, beta, trials, seed, true);
}

TailResult binomial_tail_rate_serial(std::uint64_t n, double p, double beta, std::uint64_t trials,
                                     std::uint64_t seed) {
    return tail_rate_impl(n, p, beta, trials, seed, false);
}

std::vector<std::uint64_t> slice_estimate_histogram(const SliceSpec& spec, double p,
                                                    std::uint64_t k, std::uint64_t trials,
                                                    std::uint64_t seed) {
    return histogram_impl(spec, p, k, trials, seed, true);
}

std::vector<std::uint64_t> slice_estimate_histogram_serial(const SliceSpec& spec, double p,
                                                           std::uint64_t k, std::uint64_t trials,
                                                           std::uint64_t seed) {
    return histogram_impl(spec, p, k, trials, seed, false);
}

double even_split_rate(std::uint64_t n, std::uint64_t trials, std::uint64_t seed) {
    const std::uint64_t chunks = (trials + kChunk - 1) / kChunk;
    std::vector<std::uint64_t> hits(chunks, 0);
    for_each_chunk(trials, true, [&](std::uint64_t chunk, std::uint64_t count) {
        auto engine = chunk_engine(seed, 2, chunk);
        std::binomial_distribution<std::int64_t> binom(static_cast<std::int64_t>(n), 0.5);
        std::uint64_t even = 0;
        for (std::uint64_t t = 0; t < count; ++t)
            if (binom(engine) * 2 == static_cast<std::int64_t>(n)) ++even;
        hits[chunk] = even;
    });
    std::uint64_t total = 0;
    for (std::uint64_t h : hits) total += h;
    return static_cast<double>(total) / static_cast<double>(trials);
}

}  // namespace slicekit
