#pragma once

#include "patrol/graphdecomp.hpp"
#include "patrol/metric.hpp"

#include <cstdint>
#include <random>

namespace patrol::gen {

using Rng = std::mt19937_64;

/// Seed from the PATROL_SEED environment variable, else `fallback`.
std::uint64_t seedFromEnv(std::uint64_t fallback);

/// n distinct points with coordinates uniform in [0, extent).
std::vector<std::vector<double>> randomPoints(int n, int dim, double extent, Rng& rng);

/// Shortest-path closure of a complete graph with integer weights drawn
/// uniformly from [1, maxWeight]. Always a valid integer metric.
std::vector<std::vector<double>> randomIntegerMetric(int n, int maxWeight, Rng& rng);

/// Connected multigraph: a random spanning tree plus extra random edges.
/// Parallel edges appear when `allowParallel`; loops never do.
graph::MultiGraph randomConnectedGraph(int vertices, int edges, bool allowParallel, Rng& rng);

} // namespace patrol::gen
