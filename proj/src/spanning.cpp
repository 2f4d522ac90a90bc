#include "patrol/spanning.hpp"

#include "patrol/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace patrol {

namespace {

std::vector<SiteSet> componentsOf(const SiteSet& sites, std::span<const WeightedEdge> edges, int universe) {
    UnionFind uf(universe);
    for (const auto& e : edges)
        uf.unite(e.u, e.v);
    std::map<int, SiteSet> byRoot;
    for (SiteId s : sites)
        byRoot[uf.find(s)].push_back(s);
    std::vector<SiteSet> out;
    out.reserve(byRoot.size());
    for (auto& [root, members] : byRoot)
        out.push_back(std::move(members));
    std::sort(out.begin(), out.end(), [](const SiteSet& a, const SiteSet& b) { return a.front() < b.front(); });
    return out;
}

int universeOf(const SiteSet& sites) {
    return sites.empty() ? 0 : sites.back() + 1;
}

} // namespace

bool lighter(const WeightedEdge& a, const WeightedEdge& b) {
    if (a.weight != b.weight)
        return a.weight < b.weight;
    if (a.u != b.u)
        return a.u < b.u;
    return a.v < b.v;
}

double SpanningForest::weight() const {
    double total = 0.0;
    for (const auto& e : edges)
        total += e.weight;
    return total;
}

Partition makePartition(std::vector<SiteSet> parts, int siteCount) {
    std::vector<bool> seen;
    for (auto& part : parts) {
        if (part.empty())
            throw InvalidInput("partition has an empty part");
        std::sort(part.begin(), part.end());
        for (SiteId s : part) {
            if (s < 0 || (siteCount >= 0 && s >= siteCount))
                throw InvalidInput("partition site " + std::to_string(s) + " out of range");
            if (static_cast<std::size_t>(s) >= seen.size())
                seen.resize(s + 1, false);
            if (seen[s])
                throw InvalidInput("site " + std::to_string(s) + " appears in two parts");
            seen[s] = true;
        }
    }
    if (siteCount >= 0) {
        seen.resize(siteCount, false);
        for (int s = 0; s < siteCount; ++s)
            if (!seen[s])
                throw InvalidInput("partition does not cover site " + std::to_string(s));
    }
    std::sort(parts.begin(), parts.end(), [](const SiteSet& a, const SiteSet& b) { return a.front() < b.front(); });
    return Partition{std::move(parts)};
}

UnionFind::UnionFind(int n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
}

int UnionFind::find(int x) {
    while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];
        x = parent_[x];
    }
    return x;
}

bool UnionFind::unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b)
        return false;
    if (rank_[a] < rank_[b])
        std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b])
        ++rank_[a];
    return true;
}

SpanningForest mst(const MetricSpace& space, std::span<const SiteId> subset) {
    if (subset.empty())
        throw InvalidInput("cannot span an empty subset");
    checkSubset(space, subset);

    SpanningForest forest;
    forest.sites.assign(subset.begin(), subset.end());
    std::sort(forest.sites.begin(), forest.sites.end());

    std::vector<WeightedEdge> candidates;
    const auto& sites = forest.sites;
    candidates.reserve(sites.size() * (sites.size() - 1) / 2);
    for (std::size_t a = 0; a < sites.size(); ++a)
        for (std::size_t b = a + 1; b < sites.size(); ++b)
            candidates.push_back({sites[a], sites[b], space(sites[a], sites[b])});
    std::sort(candidates.begin(), candidates.end(), lighter);

    UnionFind uf(space.size());
    for (const auto& e : candidates) {
        if (uf.unite(e.u, e.v)) {
            forest.edges.push_back(e);
            if (forest.edges.size() + 1 == sites.size())
                break;
        }
    }
    forest.components = {forest.sites};
    return forest;
}

SpanningForest mst(const MetricSpace& space) {
    SiteSet all(space.size());
    std::iota(all.begin(), all.end(), 0);
    return mst(space, all);
}

HeavyEdgeSplit removeHeaviest(const SpanningForest& forest, std::size_t count) {
    // Heaviest first; equal weights resolve toward the smaller (u, v).
    std::vector<WeightedEdge> ranked = forest.edges;
    std::sort(ranked.begin(), ranked.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
        if (a.weight != b.weight)
            return a.weight > b.weight;
        if (a.u != b.u)
            return a.u < b.u;
        return a.v < b.v;
    });
    count = std::min(count, ranked.size());

    HeavyEdgeSplit split;
    split.removed.assign(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(count));
    split.remainder.sites = forest.sites;
    for (const auto& e : forest.edges)
        if (std::find(split.removed.begin(), split.removed.end(), e) == split.removed.end())
            split.remainder.edges.push_back(e);
    split.remainder.components =
        componentsOf(forest.sites, split.remainder.edges, universeOf(forest.sites));
    return split;
}

Partition coarsen(const Partition& base, const MetricSpace& space, std::span<const WeightedEdge> edges) {
    const int n = space.size();
    UnionFind uf(n);
    SiteSet sites;
    for (const auto& part : base.parts) {
        for (SiteId s : part) {
            if (s < 0 || s >= n)
                throw InvalidInput("partition site " + std::to_string(s) + " out of range");
            uf.unite(part.front(), s);
            sites.push_back(s);
        }
    }
    for (const auto& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw InvalidInput("edge endpoint out of range");
        uf.unite(e.u, e.v);
    }
    std::sort(sites.begin(), sites.end());

    std::map<int, SiteSet> byRoot;
    for (SiteId s : sites)
        byRoot[uf.find(s)].push_back(s);
    std::vector<SiteSet> parts;
    for (auto& [root, members] : byRoot)
        parts.push_back(std::move(members));
    return makePartition(std::move(parts));
}

std::size_t countLongEdges(const SpanningForest& forest, double threshold) {
    return static_cast<std::size_t>(std::count_if(forest.edges.begin(), forest.edges.end(),
                                                  [&](const WeightedEdge& e) { return e.weight > threshold; }));
}

} // namespace patrol
