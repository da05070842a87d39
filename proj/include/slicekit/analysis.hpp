#pragma once

#include <cstdint>

#include "slicekit/ranking.hpp"

namespace slicekit {

// Inverse standard normal CDF. Acklam's rational approximation refined by one
// Halley step against erfc, giving near machine precision across (0,1);
// validated in tests against an independent bisection oracle to 1e-12.
double inverse_normal_cdf(double q);

// Two-sided Chernoff tail for a length-p slice of n uniform draws:
// Pr[|X - np| >= beta*np] <= 2 exp(-beta^2 n p / 3).
double chernoff_epsilon(double p, double beta, std::uint64_t n);

// Inversion of the bound: the smallest slice length whose population stays
// within (1 +- beta) of its expectation with probability at least 1-epsilon.
double chernoff_min_p(double epsilon, double beta, std::uint64_t n);

struct SplitProbability {
    double exact;  // C(n, n/2) / 2^n; zero for odd n
    double bound;  // sqrt(2 / (n pi))
};

// Probability that n independent coin flips split exactly evenly, with the
// closed-form upper bound it stays below.
SplitProbability perfect_split_probability(std::uint64_t n);

// required_samples (the sample-size side of the same analysis) lives in
// ranking.hpp and is pulled in through the include above.

}  // namespace slicekit
