#include "patrol/tsp.hpp"

#include "patrol/error.hpp"
#include "patrol/spanning.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace patrol {

namespace {

SiteSet sortedCopy(const MetricSpace& space, std::span<const SiteId> subset) {
    checkSubset(space, subset);
    SiteSet sites(subset.begin(), subset.end());
    std::sort(sites.begin(), sites.end());
    return sites;
}

// Rotate to start at the smallest site and orient so the second site is
// smaller than the last; gives each cyclic tour one spelling.
void canonicalize(std::vector<SiteId>& order) {
    if (order.size() < 3)
        return;
    auto first = std::min_element(order.begin(), order.end());
    std::rotate(order.begin(), first, order.end());
    if (order[1] > order.back())
        std::reverse(order.begin() + 1, order.end());
}

} // namespace

double tourLength(const MetricSpace& space, std::span<const SiteId> order) {
    if (order.size() < 2)
        return 0.0;
    double total = 0.0;
    for (std::size_t i = 0; i < order.size(); ++i)
        total += space(order[i], order[(i + 1) % order.size()]);
    return total;
}

TspAlgorithm parseTspAlgorithm(std::string_view name) {
    if (name == "exact")
        return TspAlgorithm::exact();
    if (name == "tree-double")
        return TspAlgorithm::treeDouble();
    if (name == "2opt")
        return TspAlgorithm::twoOpt();
    throw InvalidInput("unknown TSP algorithm '" + std::string(name) + "' (expected exact, tree-double or 2opt)");
}

std::string_view tspName(TspKind kind) {
    switch (kind) {
    case TspKind::Exact:
        return "exact";
    case TspKind::TreeDouble:
        return "tree-double";
    case TspKind::TwoOpt:
        return "2opt";
    }
    return "unknown";
}

Tour tourExact(const MetricSpace& space, std::span<const SiteId> subset, int exactLimit) {
    const SiteSet sites = sortedCopy(space, subset);
    const int m = static_cast<int>(sites.size());
    if (m > exactLimit)
        throw LimitExceeded("exact TSP supports at most " + std::to_string(exactLimit) + " sites, got " +
                            std::to_string(m) + "; use --tsp tree-double or --tsp 2opt");
    if (m <= 2) {
        Tour t{sites, 0.0};
        t.length = tourLength(space, t.order);
        return t;
    }

    // Held-Karp anchored at sites[0]; bit b of a mask stands for sites[b + 1].
    const int others = m - 1;
    const std::size_t full = std::size_t{1} << others;
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> cost(full * others, inf);
    std::vector<int> prev(full * others, -1);
    auto at = [others](std::size_t mask, int last) { return mask * others + last; };

    for (int j = 0; j < others; ++j)
        cost[at(std::size_t{1} << j, j)] = space(sites[0], sites[j + 1]);

    for (std::size_t mask = 1; mask < full; ++mask) {
        for (int last = 0; last < others; ++last) {
            if (!(mask & (std::size_t{1} << last)))
                continue;
            const double here = cost[at(mask, last)];
            if (here == inf)
                continue;
            for (int next = 0; next < others; ++next) {
                if (mask & (std::size_t{1} << next))
                    continue;
                const std::size_t grown = mask | (std::size_t{1} << next);
                const double candidate = here + space(sites[last + 1], sites[next + 1]);
                if (candidate < cost[at(grown, next)]) {
                    cost[at(grown, next)] = candidate;
                    prev[at(grown, next)] = last;
                }
            }
        }
    }

    double best = inf;
    int bestLast = -1;
    for (int last = 0; last < others; ++last) {
        const double candidate = cost[at(full - 1, last)] + space(sites[last + 1], sites[0]);
        if (candidate < best) {
            best = candidate;
            bestLast = last;
        }
    }

    std::vector<SiteId> order;
    order.reserve(m);
    std::size_t mask = full - 1;
    for (int last = bestLast; last >= 0;) {
        order.push_back(sites[last + 1]);
        const int before = prev[at(mask, last)];
        mask &= ~(std::size_t{1} << last);
        last = before;
    }
    order.push_back(sites[0]);
    std::reverse(order.begin(), order.end());
    canonicalize(order);
    return Tour{order, tourLength(space, order)};
}

Tour tourTreeDouble(const MetricSpace& space, std::span<const SiteId> subset) {
    if (subset.empty())
        throw InvalidInput("tree-double tour needs a nonempty subset");
    const SpanningForest tree = mst(space, subset);

    std::vector<std::vector<SiteId>> children(space.size());
    for (const auto& e : tree.edges) {
        children[e.u].push_back(e.v);
        children[e.v].push_back(e.u);
    }
    for (auto& c : children)
        std::sort(c.begin(), c.end());

    // Preorder of the doubled tree is its Euler walk with repeats shortcut.
    std::vector<SiteId> order;
    std::vector<bool> seen(space.size(), false);
    std::vector<SiteId> stack{tree.sites.front()};
    while (!stack.empty()) {
        const SiteId u = stack.back();
        stack.pop_back();
        if (seen[u])
            continue;
        seen[u] = true;
        order.push_back(u);
        for (auto it = children[u].rbegin(); it != children[u].rend(); ++it)
            if (!seen[*it])
                stack.push_back(*it);
    }
    return Tour{order, tourLength(space, order)};
}

Tour tourNearestNeighbor(const MetricSpace& space, std::span<const SiteId> subset) {
    SiteSet remaining = sortedCopy(space, subset);
    if (remaining.empty())
        return {};
    std::vector<SiteId> order{remaining.front()};
    remaining.erase(remaining.begin());
    while (!remaining.empty()) {
        auto nearest = std::min_element(remaining.begin(), remaining.end(), [&](SiteId a, SiteId b) {
            return space(order.back(), a) < space(order.back(), b);
        });
        order.push_back(*nearest);
        remaining.erase(nearest);
    }
    return Tour{order, tourLength(space, order)};
}

Tour refine2opt(const MetricSpace& space, Tour tour) {
    auto& a = tour.order;
    const std::size_t m = a.size();
    if (m <= 3) {
        tour.length = tourLength(space, a);
        return tour;
    }
    const double eps = 1e-12 * std::max(1.0, tourLength(space, a));
    const std::size_t cap = 10 * m * m;

    std::size_t moves = 0;
    bool improved = true;
    while (improved && moves < cap) {
        improved = false;
        for (std::size_t i = 0; i + 2 < m && !improved; ++i) {
            for (std::size_t j = i + 2; j < m; ++j) {
                if (i == 0 && j == m - 1)
                    continue; // the two edges are adjacent through the wrap
                const SiteId p = a[i], q = a[i + 1], r = a[j], s = a[(j + 1) % m];
                const double delta = space(p, r) + space(q, s) - space(p, q) - space(r, s);
                if (delta < -eps) {
                    std::reverse(a.begin() + static_cast<std::ptrdiff_t>(i + 1),
                                 a.begin() + static_cast<std::ptrdiff_t>(j + 1));
                    ++moves;
                    improved = true;
                    break;
                }
            }
        }
    }
    tour.length = tourLength(space, a);
    return tour;
}

Tour computeTour(const MetricSpace& space, std::span<const SiteId> subset, const TspAlgorithm& algorithm) {
    switch (algorithm.kind) {
    case TspKind::Exact:
        return tourExact(space, subset, algorithm.exactLimit);
    case TspKind::TreeDouble:
        return tourTreeDouble(space, subset);
    case TspKind::TwoOpt: {
        Tour fromTree = refine2opt(space, tourTreeDouble(space, subset));
        Tour fromGreedy = refine2opt(space, tourNearestNeighbor(space, subset));
        return fromGreedy.length < fromTree.length ? fromGreedy : fromTree;
    }
    }
    throw InvalidInput("unknown TSP algorithm");
}

} // namespace patrol
