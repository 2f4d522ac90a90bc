#pragma once

#include "patrol/decider.hpp"
#include "patrol/graphdecomp.hpp"
#include "patrol/solver.hpp"

#include <json.hpp>

#include <string>

namespace patrol::io {

using Json = nlohmann::json;

/// Rounds to 12 significant digits so emitted numbers are stable in diffs.
double round12(double x);

/// {"points": [[...], ...]} or {"matrix": [[...], ...]}, optional "labels".
MetricSpace parseInstance(const Json& doc);
MetricSpace loadInstance(const std::string& path);

Json instanceToJson(const MetricSpace& space);

Json solutionToJson(const CyclicSolution& solution);
/// Solution plus the certificate fields gamma, epsilon and bound.
Json reportToJson(const CyclicSolution& solution, const SolverConfig& config);

/// Reads parts, tour orders and robots back; lengths and latency are
/// recomputed from `space` rather than trusted.
CyclicSolution parseSolution(const Json& doc, const MetricSpace& space);

/// {"vertices": N, "edges": [[u, v], ...]}
graph::MultiGraph parseGraph(const Json& doc);
Json graphToJson(const graph::MultiGraph& g);
Json decompositionToJson(const graph::Decomposition& d);
Json eulerizationToJson(const graph::Eulerization& e);

Json witnessToJson(const PeriodicWitness& witness, const UnitGraph& graph);

Json readJsonFile(const std::string& path);
void writeJsonFile(const std::string& path, const Json& doc);

} // namespace patrol::io
