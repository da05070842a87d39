#include "slicekit/ranking.hpp"

#include <cmath>
#include <stdexcept>

#include "slicekit/analysis.hpp"

namespace slicekit {

std::optional<double> nearest_interior_boundary(const SliceSpec& spec, double x) {
    const auto& b = spec.boundaries();
    if (b.size() <= 2) return std::nullopt;
    std::optional<double> best;
    double best_dist = 0.0;
    for (std::size_t k = 1; k + 1 < b.size(); ++k) {
        const double dist = std::abs(x - b[k]);
        if (!best || dist < best_dist) {
            best = b[k];
            best_dist = dist;
        }
    }
    return best;
}

std::optional<RankingTargets> ranking_active_scan(Node& node, const SliceSpec& spec, Rng& rng) {
    const auto& entries = node.view.entries();
    if (entries.empty()) return std::nullopt;

    // The proximity target is judged against the boundary closest to the
    // node's own current estimate (pre-scan; the initial random value stands
    // in until the first observation).
    const double own = node.has_estimate() ? node.rank_estimate() : node.rvalue;
    const std::optional<double> boundary = nearest_interior_boundary(spec, own);

    RankingTargets targets;
    bool have_biased = false;
    double dist_min = 0.0;
    for (const auto& e : entries) {
        node.observe(e.attr <= node.attr);
        const double dist = boundary ? std::abs(e.rvalue - *boundary) : 0.0;
        if (!have_biased || dist < dist_min || (dist == dist_min && e.id < targets.biased)) {
            targets.biased = e.id;
            dist_min = dist;
            have_biased = true;
        }
    }
    targets.random = entries[rng.below(entries.size())].id;
    return targets;
}

void ranking_refresh_estimate(Node& node, const SliceSpec& spec) {
    if (!node.has_estimate()) return;
    node.rvalue = node.rank_estimate();
    node.slice_estimate = slice_of_estimate(spec, node.rvalue);
}

void ranking_receive(Node& node, double sender_attr, const SliceSpec& spec) {
    node.observe(sender_attr <= node.attr);
    ranking_refresh_estimate(node, spec);
}

std::uint64_t required_samples(double p_hat, double d, double alpha) {
    if (!(p_hat > 0.0) || !(p_hat < 1.0))
        throw std::domain_error("required_samples: p_hat must lie in (0,1)");
    if (!(alpha > 0.0) || !(alpha < 1.0))
        throw std::domain_error("required_samples: alpha must lie in (0,1)");
    if (!(d > 0.0))
        throw std::domain_error("required_samples: estimate sits on a slice boundary (d = 0), "
                                "no finite sample count suffices");
    const double z = inverse_normal_cdf(1.0 - alpha / 2.0);
    const double root = z * std::sqrt(p_hat * (1.0 - p_hat)) / d;
    return static_cast<std::uint64_t>(std::ceil(root * root));
}

}  // namespace slicekit
