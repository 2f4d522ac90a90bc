#pragma once

#include "patrol/metric.hpp"

#include <string_view>

namespace patrol {

/// Closed tour through a set of sites, in visiting order.
struct Tour {
    std::vector<SiteId> order;
    double length = 0.0;
};

/// Sum of consecutive distances including the wrap-around edge.
double tourLength(const MetricSpace& space, std::span<const SiteId> order);

enum class TspKind { Exact, TreeDouble, TwoOpt };

/// A TSP routine together with the approximation factor it guarantees.
struct TspAlgorithm {
    static constexpr int kDefaultExactLimit = 13;

    TspKind kind = TspKind::Exact;
    int exactLimit = kDefaultExactLimit;

    double gamma() const noexcept { return kind == TspKind::Exact ? 1.0 : 2.0; }

    static TspAlgorithm exact(int limit = kDefaultExactLimit) { return {TspKind::Exact, limit}; }
    static TspAlgorithm treeDouble() { return {TspKind::TreeDouble, kDefaultExactLimit}; }
    static TspAlgorithm twoOpt() { return {TspKind::TwoOpt, kDefaultExactLimit}; }
};

/// Parses the CLI spelling: "exact", "tree-double" or "2opt".
TspAlgorithm parseTspAlgorithm(std::string_view name);
std::string_view tspName(TspKind kind);

/// Held-Karp optimum. Throws LimitExceeded past `exactLimit` sites.
Tour tourExact(const MetricSpace& space, std::span<const SiteId> subset,
               int exactLimit = TspAlgorithm::kDefaultExactLimit);

/// Shortcut preorder walk of the subset's MST; at most twice the optimum.
Tour tourTreeDouble(const MetricSpace& space, std::span<const SiteId> subset);

Tour tourNearestNeighbor(const MetricSpace& space, std::span<const SiteId> subset);

/// First-improvement 2-opt to a local optimum. Never lengthens the tour.
Tour refine2opt(const MetricSpace& space, Tour tour);

Tour computeTour(const MetricSpace& space, std::span<const SiteId> subset, const TspAlgorithm& algorithm);

} // namespace patrol
