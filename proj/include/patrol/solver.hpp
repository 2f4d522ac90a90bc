#pragma once

#include "patrol/spanning.hpp"
#include "patrol/tsp.hpp"

namespace patrol {

/// Partition of the sites, one closed tour per part, and the number of
/// robots spaced evenly along each tour. latency = max_i length_i / robots_i.
struct CyclicSolution {
    Partition partition;
    std::vector<Tour> tours;
    std::vector<int> robots;
    double latency = 0.0;

    int robotCount() const;
};

struct SolverConfig {
    int k = 1;
    double epsilon = 1.0;
    TspAlgorithm tsp = TspAlgorithm::exact();
    bool parallel = false;

    double gamma() const noexcept { return tsp.gamma(); }
    /// Guaranteed ratio against the optimal cyclic latency.
    double bound() const noexcept { return (1.0 + epsilon) * gamma(); }
};

/// max_i lengths[i] / robots[i]; a zero-length part contributes 0.
double maxRatio(std::span<const double> lengths, std::span<const int> robots);

/// Greedy allocation: one robot per part, then each further robot goes to
/// the part with the largest current ratio (lowest index on ties).
/// Throws InfeasibleAssignment when k < lengths.size().
std::vector<int> assignRobots(std::span<const double> lengths, int k);

/// Same contract as assignRobots, by enumerating every composition of k.
std::vector<int> assignRobotsExhaustive(std::span<const double> lengths, int k);

/// Tours each part with `tsp` and distributes k robots greedily.
CyclicSolution evaluate(const MetricSpace& space, const Partition& partition, int k, const TspAlgorithm& tsp);

/// ceil(k (1 + k / epsilon)): how many heavy MST edges the solver removes.
std::size_t heavyEdgeBudget(int k, double epsilon);

struct SolveStats {
    std::size_t removedEdges = 0;
    std::size_t forestComponents = 0;
    std::size_t candidates = 0;
    std::size_t distinctParts = 0;
};

/// (1 + epsilon) * gamma approximation of the best cyclic solution.
///
/// Removes the heaviest heavyEdgeBudget() edges of MST(P). Every subset S
/// of at most k - 1 removed edges is kept cut while the other removed edges
/// are restored, giving a partition into |S| + 1 MST-connected parts. Each
/// candidate is evaluated and the first minimum (subsets by size, then in
/// colex order) is returned. `parallel` only changes who computes the tours;
/// the result is identical.
CyclicSolution solve(const MetricSpace& space, const SolverConfig& config, SolveStats* stats = nullptr);

/// Exact optimum over all partitions into at most k parts, with exact tours
/// and exhaustive robot allocation. Limited to n <= 10 and k <= 5.
CyclicSolution bruteForceCyclic(const MetricSpace& space, int k);

inline constexpr int kBruteForceMaxSites = 10;
inline constexpr int kBruteForceMaxRobots = 5;

} // namespace patrol
