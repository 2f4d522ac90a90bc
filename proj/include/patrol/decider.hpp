#pragma once

#include "patrol/metric.hpp"

#include <cstdint>
#include <optional>

namespace patrol {

/// Robots on nodes of the unit graph at an integer time, plus for every
/// original site the time elapsed since it was last visited.
struct Configuration {
    std::vector<int> positions;   // one node per robot
    std::vector<int> sinceVisit;  // one counter per original site

    bool operator==(const Configuration&) const = default;
};

/// Runs `prefix` once, then repeats `cycle` forever. Robots are
/// interchangeable: a step is legal when some matching of robots moves each
/// one along at most one unit edge.
struct PeriodicWitness {
    std::vector<Configuration> prefix;
    std::vector<Configuration> cycle;
};

struct Decision {
    bool answer = false;
    std::optional<PeriodicWitness> witness;
    std::uint64_t statesVisited = 0;
};

inline constexpr double kDeciderStateLimit = 1e7;

/// Does some k-robot schedule keep every gap between consecutive visits at
/// most `ell`? Distances must be positive integers. Searches the graph of
/// configurations whose counters stay below `ell` for a reachable cycle,
/// starting from every placement of the robots on original sites with all
/// counters at zero. Throws LimitExceeded when
/// totalCount^k * (ell + 1)^n exceeds kDeciderStateLimit.
Decision decide(const MetricSpace& space, int k, int ell);

/// Least integer ell >= 1 for which decide() holds, or 0 when k >= n (one
/// robot parked on every site).
int minimalLatency(const MetricSpace& space, int k);

/// True when `to` follows `from` by moving every robot at most one unit
/// edge, up to relabelling the robots.
bool isLegalStep(const UnitGraph& graph, const std::vector<int>& from, const std::vector<int>& to);

} // namespace patrol
