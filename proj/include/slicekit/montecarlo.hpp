#pragma once

#include <cstdint>
#include <vector>

#include "slicekit/core.hpp"

namespace slicekit {

// Monte-Carlo validators for the closed-form bounds. Trials are processed in
// fixed-size chunks, each chunk on its own derived RNG stream, so the OpenMP
// versions produce bit-identical results to their serial twins at any thread
// count. The serial twins stay around as reference implementations for tests
// and for the benchmark comparison.

struct TailResult {
    std::uint64_t violations = 0;
    std::uint64_t trials = 0;
    double rate() const { return static_cast<double>(violations) / static_cast<double>(trials); }
};

// Fraction of Binomial(n, p) draws landing outside [(1-beta)np, (1+beta)np].
TailResult binomial_tail_rate(std::uint64_t n, double p, double beta, std::uint64_t trials,
                              std::uint64_t seed);
TailResult binomial_tail_rate_serial(std::uint64_t n, double p, double beta, std::uint64_t trials,
                                     std::uint64_t seed);

// Histogram (1-based slice index -> count) of the slice a fresh estimator
// lands in after exactly k independent below-or-not observations at true
// rank p. Estimate 0 clamps to slice 1, matching the protocol.
std::vector<std::uint64_t> slice_estimate_histogram(const SliceSpec& spec, double p,
                                                    std::uint64_t k, std::uint64_t trials,
                                                    std::uint64_t seed);
std::vector<std::uint64_t> slice_estimate_histogram_serial(const SliceSpec& spec, double p,
                                                           std::uint64_t k, std::uint64_t trials,
                                                           std::uint64_t seed);

// Fraction of trials in which n coin flips split exactly evenly.
double even_split_rate(std::uint64_t n, std::uint64_t trials, std::uint64_t seed);

}  // namespace slicekit
