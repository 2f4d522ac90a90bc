#include "patrol/solver.hpp"

#include "patrol/error.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <thread>

namespace patrol {

namespace {

// a / ka > b / kb without dividing.
bool ratioGreater(double a, int ka, double b, int kb) {
    return a * kb > b * ka;
}

void requireFeasible(std::size_t parts, int k) {
    if (k < 1)
        throw InvalidInput("k must be ≥ 1");
    if (static_cast<std::size_t>(k) < parts)
        throw InfeasibleAssignment("cannot give " + std::to_string(parts) + " parts at least one robot each with k=" +
                                   std::to_string(k));
}

// Visits combinations of {0..r-1} of size `size` in colex order.
template <class Visit>
void forEachCombination(std::size_t r, std::size_t size, Visit&& visit) {
    if (size > r)
        return;
    std::vector<std::size_t> c(size);
    for (std::size_t i = 0; i < size; ++i)
        c[i] = i;
    while (true) {
        visit(std::as_const(c));
        std::size_t i = 0;
        while (i < size && c[i] + 1 == (i + 1 < size ? c[i + 1] : r))
            ++i;
        if (i == size)
            return;
        ++c[i];
        for (std::size_t j = 0; j < i; ++j)
            c[j] = j;
    }
}

template <class Task>
void runIndexed(std::size_t count, bool parallel, Task&& task) {
    if (!parallel || count < 2) {
        for (std::size_t i = 0; i < count; ++i)
            task(i);
        return;
    }
    const std::size_t workers =
        std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::exception_ptr> failures(count);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    task(i);
                } catch (...) {
                    failures[i] = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool)
        t.join();
    for (auto& f : failures)
        if (f)
            std::rethrow_exception(f);
}

CyclicSolution assemble(Partition partition, std::vector<Tour> tours, std::vector<int> robots) {
    std::vector<double> lengths;
    lengths.reserve(tours.size());
    for (const auto& t : tours)
        lengths.push_back(t.length);
    CyclicSolution s;
    s.latency = maxRatio(lengths, robots);
    s.partition = std::move(partition);
    s.tours = std::move(tours);
    s.robots = std::move(robots);
    return s;
}

} // namespace

int CyclicSolution::robotCount() const {
    int total = 0;
    for (int r : robots)
        total += r;
    return total;
}

double maxRatio(std::span<const double> lengths, std::span<const int> robots) {
    double worst = 0.0;
    for (std::size_t i = 0; i < lengths.size(); ++i)
        worst = std::max(worst, lengths[i] / robots[i]);
    return worst;
}

std::vector<int> assignRobots(std::span<const double> lengths, int k) {
    requireFeasible(lengths.size(), k);
    std::vector<int> robots(lengths.size(), 1);
    if (lengths.empty())
        return robots;

    auto lowerPriority = [&](std::size_t a, std::size_t b) {
        if (ratioGreater(lengths[b], robots[b], lengths[a], robots[a]))
            return true;
        if (ratioGreater(lengths[a], robots[a], lengths[b], robots[b]))
            return false;
        return a > b;
    };
    std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(lowerPriority)> queue(lowerPriority);
    for (std::size_t i = 0; i < lengths.size(); ++i)
        queue.push(i);
    for (int spare = k - static_cast<int>(lengths.size()); spare > 0; --spare) {
        const std::size_t top = queue.top();
        queue.pop();
        ++robots[top];
        queue.push(top);
    }
    return robots;
}

std::vector<int> assignRobotsExhaustive(std::span<const double> lengths, int k) {
    requireFeasible(lengths.size(), k);
    const std::size_t t = lengths.size();
    std::vector<int> current(t, 1), best(t, 1);
    if (t == 0)
        return best;
    double bestValue = std::numeric_limits<double>::infinity();

    auto recurse = [&](auto&& self, std::size_t index, int left) -> void {
        if (index + 1 == t) {
            current[index] = left;
            const double value = maxRatio(lengths, current);
            if (value < bestValue) {
                bestValue = value;
                best = current;
            }
            return;
        }
        const int reserve = static_cast<int>(t - index - 1);
        for (int take = 1; take <= left - reserve; ++take) {
            current[index] = take;
            self(self, index + 1, left - take);
        }
    };
    recurse(recurse, 0, k);
    return best;
}

CyclicSolution evaluate(const MetricSpace& space, const Partition& partition, int k, const TspAlgorithm& tsp) {
    Partition canonical = makePartition(partition.parts, space.size());
    requireFeasible(canonical.size(), k);
    std::vector<Tour> tours;
    std::vector<double> lengths;
    for (const auto& part : canonical.parts) {
        tours.push_back(computeTour(space, part, tsp));
        lengths.push_back(tours.back().length);
    }
    std::vector<int> robots = assignRobots(lengths, k);
    return assemble(std::move(canonical), std::move(tours), std::move(robots));
}

std::size_t heavyEdgeBudget(int k, double epsilon) {
    if (k < 1)
        throw InvalidInput("k must be ≥ 1");
    if (!(epsilon > 0.0) || !std::isfinite(epsilon))
        throw InvalidInput("epsilon must be a positive finite number");
    const double budget = std::ceil(k * (1.0 + k / epsilon));
    constexpr double cap = static_cast<double>(std::numeric_limits<int>::max());
    return static_cast<std::size_t>(std::min(budget, cap));
}

CyclicSolution solve(const MetricSpace& space, const SolverConfig& config, SolveStats* stats) {
    const std::size_t budget = heavyEdgeBudget(config.k, config.epsilon);
    const SpanningForest tree = mst(space);
    const HeavyEdgeSplit split = removeHeaviest(tree, budget);
    const Partition components = makePartition(split.remainder.components, space.size());
    const std::size_t r = split.removed.size();
    const std::size_t maxCut = std::min<std::size_t>(r, static_cast<std::size_t>(config.k - 1));

    std::vector<Partition> candidates;
    for (std::size_t cutCount = 0; cutCount <= maxCut; ++cutCount) {
        forEachCombination(r, cutCount, [&](const std::vector<std::size_t>& cut) {
            std::vector<WeightedEdge> restored;
            restored.reserve(r - cutCount);
            std::size_t c = 0;
            for (std::size_t e = 0; e < r; ++e) {
                if (c < cut.size() && cut[c] == e)
                    ++c;
                else
                    restored.push_back(split.removed[e]);
            }
            candidates.push_back(coarsen(components, space, restored));
        });
    }

    std::map<SiteSet, std::size_t> partIndex;
    std::vector<const SiteSet*> distinctParts;
    for (const auto& p : candidates)
        for (const auto& part : p.parts)
            if (partIndex.emplace(part, distinctParts.size()).second)
                distinctParts.push_back(&part);

    std::vector<Tour> tours(distinctParts.size());
    runIndexed(distinctParts.size(), config.parallel,
               [&](std::size_t i) { tours[i] = computeTour(space, *distinctParts[i], config.tsp); });

    std::size_t bestIndex = 0;
    double bestLatency = std::numeric_limits<double>::infinity();
    std::vector<int> bestRobots;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        std::vector<double> lengths;
        for (const auto& part : candidates[i].parts)
            lengths.push_back(tours[partIndex.at(part)].length);
        std::vector<int> robots = assignRobots(lengths, config.k);
        const double latency = maxRatio(lengths, robots);
        if (latency < bestLatency) {
            bestLatency = latency;
            bestIndex = i;
            bestRobots = std::move(robots);
        }
    }

    if (stats) {
        stats->removedEdges = r;
        stats->forestComponents = components.size();
        stats->candidates = candidates.size();
        stats->distinctParts = distinctParts.size();
    }

    std::vector<Tour> chosen;
    for (const auto& part : candidates[bestIndex].parts)
        chosen.push_back(tours[partIndex.at(part)]);
    return assemble(std::move(candidates[bestIndex]), std::move(chosen), std::move(bestRobots));
}

CyclicSolution bruteForceCyclic(const MetricSpace& space, int k) {
    const int n = space.size();
    if (k < 1)
        throw InvalidInput("k must be ≥ 1");
    if (n > kBruteForceMaxSites || k > kBruteForceMaxRobots)
        throw LimitExceeded("brute-force oracle supports n <= " + std::to_string(kBruteForceMaxSites) +
                            " and k <= " + std::to_string(kBruteForceMaxRobots));

    std::vector<std::optional<Tour>> tourByMask(std::size_t{1} << n);
    auto tourOf = [&](unsigned mask) -> const Tour& {
        auto& slot = tourByMask[mask];
        if (!slot) {
            SiteSet part;
            for (int s = 0; s < n; ++s)
                if (mask & (1u << s))
                    part.push_back(s);
            slot = tourExact(space, part, kBruteForceMaxSites);
        }
        return *slot;
    };

    const int maxParts = std::min(k, n);
    std::vector<int> block(n, 0);
    std::vector<unsigned> masks;
    double bestLatency = std::numeric_limits<double>::infinity();
    std::vector<unsigned> bestMasks;
    std::vector<int> bestRobots;

    // Restricted growth strings: block[i] <= 1 + max(block[0..i-1]).
    auto recurse = [&](auto&& self, int index, int used) -> void {
        if (index == n) {
            masks.assign(used, 0u);
            for (int s = 0; s < n; ++s)
                masks[block[s]] |= 1u << s;
            std::vector<double> lengths;
            for (unsigned m : masks)
                lengths.push_back(tourOf(m).length);
            std::vector<int> robots = assignRobotsExhaustive(lengths, k);
            const double latency = maxRatio(lengths, robots);
            if (latency < bestLatency) {
                bestLatency = latency;
                bestMasks = masks;
                bestRobots = std::move(robots);
            }
            return;
        }
        for (int b = 0; b <= used && b < maxParts; ++b) {
            block[index] = b;
            self(self, index + 1, std::max(used, b + 1));
        }
    };
    recurse(recurse, 0, 0);

    // Blocks are numbered by first appearance, so parts already come ordered
    // by their smallest site.
    std::vector<SiteSet> parts;
    std::vector<Tour> tours;
    for (unsigned m : bestMasks) {
        tours.push_back(tourOf(m));
        parts.push_back(tours.back().order);
    }
    return assemble(makePartition(std::move(parts), n), std::move(tours), std::move(bestRobots));
}

} // namespace patrol
