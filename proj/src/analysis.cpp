#include "slicekit/analysis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace slicekit {

namespace {

double acklam_approximation(double q) {
    // Coefficients from Acklam's rational approximation (relative error
    // ~1.15e-9 over the full open interval).
    static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                   -2.759285104469687e+02, 1.383577518672690e+02,
                                   -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                   -1.556989798598866e+02, 6.680131188771972e+01,
                                   -1.328068155288572e+01};
    static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                   -2.400758277161838e+00, -2.549732539343734e+00,
                                   4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                   2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double lo = 0.02425;

    if (q < lo) {
        const double u = std::sqrt(-2.0 * std::log(q));
        return (((((c[0] * u + c[1]) * u + c[2]) * u + c[3]) * u + c[4]) * u + c[5]) /
               ((((d[0] * u + d[1]) * u + d[2]) * u + d[3]) * u + 1.0);
    }
    if (q > 1.0 - lo) {
        const double u = std::sqrt(-2.0 * std::log(1.0 - q));
        return -(((((c[0] * u + c[1]) * u + c[2]) * u + c[3]) * u + c[4]) * u + c[5]) /
               ((((d[0] * u + d[1]) * u + d[2]) * u + d[3]) * u + 1.0);
    }
    const double u = q - 0.5;
    const double r = u * u;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * u /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

}  // namespace

double inverse_normal_cdf(double q) {
    if (!(q > 0.0) || !(q < 1.0))
        throw std::domain_error("inverse_normal_cdf: argument must lie in (0,1)");
    double x = acklam_approximation(q);
    // One Halley refinement against the exact CDF.
    const double e = normal_cdf(x) - q;
    const double u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(x * x / 2.0);
    x = x - u / (1.0 + x * u / 2.0);
    return x;
}

double chernoff_epsilon(double p, double beta, std::uint64_t n) {
    if (!(p > 0.0) || !(p <= 1.0)) throw std::domain_error("chernoff_epsilon: p must lie in (0,1]");
    if (!(beta > 0.0) || !(beta <= 1.0))
        throw std::domain_error("chernoff_epsilon: beta must lie in (0,1]");
    return 2.0 * std::exp(-beta * beta * static_cast<double>(n) * p / 3.0);
}

double chernoff_min_p(double epsilon, double beta, std::uint64_t n) {
    if (!(epsilon > 0.0) || !(epsilon < 2.0))
        throw std::domain_error("chernoff_min_p: epsilon must lie in (0,2)");
    if (!(beta > 0.0) || !(beta <= 1.0))
        throw std::domain_error("chernoff_min_p: beta must lie in (0,1]");
    return 3.0 / (beta * beta * static_cast<double>(n)) * std::log(2.0 / epsilon);
}

SplitProbability perfect_split_probability(std::uint64_t n) {
    if (n < 1) throw std::domain_error("perfect_split_probability: n must be positive");
    SplitProbability result{};
    result.bound = std::sqrt(2.0 / (static_cast<double>(n) * std::numbers::pi));
    if (n % 2 != 0) {
        result.exact = 0.0;  // an odd count cannot split evenly
        return result;
    }
    const double nd = static_cast<double>(n);
    const double half = nd / 2.0;
    result.exact = std::exp(std::lgamma(nd + 1.0) - 2.0 * std::lgamma(half + 1.0) -
                            nd * std::numbers::ln2);
    return result;
}

}  // namespace slicekit
