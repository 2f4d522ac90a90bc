#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace patrol::graph {

struct Edge {
    int u = 0;
    int v = 0;
    int id = 0;
};

/// Undirected multigraph; parallel edges and loops are allowed. Edge ids are
/// caller-chosen but must be unique.
struct MultiGraph {
    int vertexCount = 0;
    std::vector<Edge> edges;

    /// Appends an edge with id = current edge count.
    int addEdge(int u, int v);
    /// Degree of every vertex; a loop counts twice.
    std::vector<int> degrees() const;
    /// Throws InvalidInput on out-of-range endpoints or repeated ids.
    void validate() const;
    /// Every vertex reachable from vertex 0.
    bool connected() const;
    bool hasLoop() const;
    const Edge& edgeById(int id) const;
};

/// Multigraph from an endpoint list; edge i gets id i.
MultiGraph fromEdgeList(int vertexCount, const std::vector<std::pair<int, int>>& endpoints);

/// Every degree even (connectivity checked separately).
bool allDegreesEven(const MultiGraph& g);

struct Eulerization {
    std::vector<int> duplicatedEdgeIds;  // ids of original edges that were doubled, ascending
    MultiGraph result;                   // original edges plus one copy per duplicated id
};

/// Pairs the odd-degree vertices along a BFS spanning tree so the total
/// tree-path length is minimal, then doubles the tree edges on those paths.
/// Minimality makes the paths edge-disjoint, so each edge is doubled at most
/// once. Throws NotConnected, or InvalidInput for an edgeless graph.
Eulerization eulerize(const MultiGraph& g);

/// Simple line graph: vertex i is g.edges[i]; vertices are adjacent when
/// the edges share an endpoint.
MultiGraph lineGraph(const MultiGraph& g);

struct Decomposition {
    std::vector<std::pair<int, int>> twoPaths;
    std::optional<std::array<int, 3>> claw;
    std::optional<int> leftoverEdge;
};

/// Partition of a connected, loop-free graph with an even edge count into
/// 2-paths.
Decomposition decomposeEven(const MultiGraph& g);

/// Partition of a connected, loop-free graph with an odd edge count into
/// 2-paths plus one edge incident to `anchor`.
Decomposition decomposeOddAnchored(const MultiGraph& g, int anchor);

/// 2-paths, or 2-paths plus one claw when the edge count is odd. Requires an
/// even cycle; throws PreconditionViolated when none is usable.
Decomposition decomposeWithClaw(const MultiGraph& g);

/// A cycle given as its closed vertex walk and the edge ids between
/// consecutive vertices (edges[i] joins vertices[i] and vertices[i + 1 mod len]).
struct Cycle {
    std::vector<int> vertices;
    std::vector<int> edges;
};

/// Even cycles of g: fundamental cycles of a BFS tree first, then an
/// exhaustive simple-cycle search. Throws LimitExceeded if the search budget
/// runs out before any even cycle is found.
std::vector<Cycle> evenCycles(const MultiGraph& g);

} // namespace patrol::graph
