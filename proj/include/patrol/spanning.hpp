#pragma once

#include "patrol/metric.hpp"

#include <compare>

namespace patrol {

/// Undirected site-to-site edge, stored with u < v.
struct WeightedEdge {
    SiteId u = 0;
    SiteId v = 0;
    double weight = 0.0;

    bool operator==(const WeightedEdge&) const = default;
};

/// Strict order on (weight, u, v); the tie-break used everywhere.
bool lighter(const WeightedEdge& a, const WeightedEdge& b);

struct SpanningForest {
    SiteSet sites;                      // sorted
    std::vector<WeightedEdge> edges;    // in Kruskal acceptance order
    std::vector<SiteSet> components;    // each sorted; ordered by smallest site

    double weight() const;
};

/// Disjoint nonempty parts covering a site set. Canonical form: each part
/// sorted, parts ordered by their smallest site.
struct Partition {
    std::vector<SiteSet> parts;

    std::size_t size() const noexcept { return parts.size(); }
    bool operator==(const Partition&) const = default;
};

/// Sorts parts into canonical form and checks disjointness and nonemptiness.
/// When `siteCount` is nonnegative the parts must cover [0, siteCount).
Partition makePartition(std::vector<SiteSet> parts, int siteCount = -1);

class UnionFind {
public:
    explicit UnionFind(int n);
    int find(int x);
    bool unite(int a, int b);

private:
    std::vector<int> parent_;
    std::vector<int> rank_;
};

/// Kruskal over the complete graph on `subset`.
SpanningForest mst(const MetricSpace& space, std::span<const SiteId> subset);
SpanningForest mst(const MetricSpace& space);

struct HeavyEdgeSplit {
    std::vector<WeightedEdge> removed;  // heaviest first
    SpanningForest remainder;
};

/// Drops the `count` heaviest edges (all of them if fewer exist).
HeavyEdgeSplit removeHeaviest(const SpanningForest& forest, std::size_t count);

/// Merges the parts of `base` along `edges`.
Partition coarsen(const Partition& base, const MetricSpace& space, std::span<const WeightedEdge> edges);

/// Number of forest edges strictly heavier than `threshold`.
std::size_t countLongEdges(const SpanningForest& forest, double threshold);

} // namespace patrol
