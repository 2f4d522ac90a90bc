#include "patrol/graphdecomp.hpp"

#include "patrol/error.hpp"
#include "patrol/spanning.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace patrol::graph {

namespace {

constexpr int kMaxOddVertices = 20;
constexpr long kCycleSearchBudget = 2'000'000;

struct Incidence {
    int edge;   // index into the edge vector
    int other;
};

std::vector<std::vector<Incidence>> incidences(int vertexCount, const std::vector<Edge>& edges) {
    std::vector<std::vector<Incidence>> adj(vertexCount);
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        adj[edges[i].u].push_back({i, edges[i].v});
        if (edges[i].u != edges[i].v)
            adj[edges[i].v].push_back({i, edges[i].u});
    }
    return adj;
}

void requireLoopFree(const MultiGraph& g) {
    if (g.hasLoop())
        throw InvalidInput("2-path decompositions do not accept loops");
}

void requireConnected(const MultiGraph& g) {
    if (!g.connected())
        throw NotConnected("graph is not connected");
}

// Sumner-style peeling. Repeatedly removes a 2-path from the connected edge
// set containing `anchor` while keeping the rest connected; stops when no
// edge is left or the single remaining edge hangs at the anchor.
std::optional<int> peelTwoPaths(int vertexCount, std::vector<Edge> alive, int anchor,
                                std::vector<std::pair<int, int>>& out) {
    while (!alive.empty()) {
        const auto adj = incidences(vertexCount, alive);

        std::vector<int> depth(vertexCount, -1), parent(vertexCount, -1), parentEdge(vertexCount, -1);
        std::vector<bool> inTree(alive.size(), false);
        std::queue<int> frontier;
        depth[anchor] = 0;
        frontier.push(anchor);
        while (!frontier.empty()) {
            const int x = frontier.front();
            frontier.pop();
            for (const auto& inc : adj[x]) {
                if (depth[inc.other] >= 0)
                    continue;
                depth[inc.other] = depth[x] + 1;
                parent[inc.other] = x;
                parentEdge[inc.other] = inc.edge;
                inTree[inc.edge] = true;
                frontier.push(inc.other);
            }
        }
        for (const auto& e : alive)
            if (depth[e.u] < 0 || depth[e.v] < 0)
                throw std::logic_error("peeling left the edge set disconnected from the anchor");

        std::vector<std::vector<int>> nonTree(vertexCount);
        for (int i = 0; i < static_cast<int>(alive.size()); ++i) {
            if (inTree[i])
                continue;
            nonTree[alive[i].u].push_back(i);
            nonTree[alive[i].v].push_back(i);
        }

        auto take = [&](int a, int b) {
            out.emplace_back(alive[a].id, alive[b].id);
            const int hi = std::max(a, b), lo = std::min(a, b);
            alive.erase(alive.begin() + hi);
            alive.erase(alive.begin() + lo);
        };

        bool removed = false;
        for (int x = 0; x < vertexCount && !removed; ++x) {
            if (nonTree[x].size() >= 2) {
                take(nonTree[x][0], nonTree[x][1]);
                removed = true;
            }
        }
        if (removed)
            continue;

        int u = -1;
        for (int x = 0; x < vertexCount; ++x)
            if (depth[x] > 0 && (u < 0 || depth[x] > depth[u]))
                u = x;
        const int e1 = parentEdge[u];
        const int w = parent[u];

        if (!nonTree[u].empty()) { // (i)
            take(e1, nonTree[u][0]);
            continue;
        }
        if (!nonTree[w].empty()) { // (ii)
            take(e1, nonTree[w][0]);
            continue;
        }
        int sibling = -1;
        for (int x = 0; x < vertexCount; ++x)
            if (x != u && parent[x] == w && depth[x] > 0) {
                sibling = x;
                break;
            }
        if (sibling >= 0) { // (iii)c
            take(e1, parentEdge[sibling]);
            continue;
        }
        if (w != anchor) { // (iii)b
            take(e1, parentEdge[w]);
            continue;
        }
        // (iii)a: the last edge, hanging at the anchor.
        if (alive.size() != 1)
            throw std::logic_error("peeling reached the anchor with edges left over");
        return alive.front().id;
    }
    return std::nullopt;
}

std::vector<int> bfsTree(const MultiGraph& g, int root, std::vector<int>& depth, std::vector<int>& parentEdgeId) {
    const auto adj = incidences(g.vertexCount, g.edges);
    std::vector<int> parent(g.vertexCount, -1);
    depth.assign(g.vertexCount, -1);
    parentEdgeId.assign(g.vertexCount, -1);
    std::queue<int> frontier;
    depth[root] = 0;
    frontier.push(root);
    while (!frontier.empty()) {
        const int x = frontier.front();
        frontier.pop();
        for (const auto& inc : adj[x]) {
            if (depth[inc.other] >= 0)
                continue;
            depth[inc.other] = depth[x] + 1;
            parent[inc.other] = x;
            parentEdgeId[inc.other] = g.edges[inc.edge].id;
            frontier.push(inc.other);
        }
    }
    return parent;
}

// Tree path a -> b as (vertex walk, edge ids).
Cycle treePath(int a, int b, const std::vector<int>& parent, const std::vector<int>& depth,
               const std::vector<int>& parentEdgeId) {
    std::vector<int> upA{a}, upB{b}, edgesA, edgesB;
    while (a != b) {
        if (depth[a] >= depth[b]) {
            edgesA.push_back(parentEdgeId[a]);
            a = parent[a];
            upA.push_back(a);
        } else {
            edgesB.push_back(parentEdgeId[b]);
            b = parent[b];
            upB.push_back(b);
        }
    }
    Cycle path;
    path.vertices = upA;
    for (auto it = upB.rbegin() + 1; it != upB.rend(); ++it)
        path.vertices.push_back(*it);
    path.edges = edgesA;
    path.edges.insert(path.edges.end(), edgesB.rbegin(), edgesB.rend());
    return path;
}

std::vector<int> sortedIds(const Cycle& c) {
    std::vector<int> ids = c.edges;
    std::sort(ids.begin(), ids.end());
    return ids;
}

} // namespace

int MultiGraph::addEdge(int u, int v) {
    const int id = static_cast<int>(edges.size());
    edges.push_back({u, v, id});
    return id;
}

std::vector<int> MultiGraph::degrees() const {
    std::vector<int> deg(vertexCount, 0);
    for (const auto& e : edges) {
        ++deg[e.u];
        ++deg[e.v];
    }
    return deg;
}

void MultiGraph::validate() const {
    if (vertexCount < 1)
        throw InvalidInput("graph needs at least one vertex");
    std::set<int> ids;
    for (const auto& e : edges) {
        if (e.u < 0 || e.u >= vertexCount || e.v < 0 || e.v >= vertexCount)
            throw InvalidInput("edge " + std::to_string(e.id) + " has an endpoint out of range");
        if (!ids.insert(e.id).second)
            throw InvalidInput("edge id " + std::to_string(e.id) + " is repeated");
    }
}

bool MultiGraph::connected() const {
    if (vertexCount <= 1)
        return true;
    UnionFind uf(vertexCount);
    int components = vertexCount;
    for (const auto& e : edges)
        if (uf.unite(e.u, e.v))
            --components;
    return components == 1;
}

bool MultiGraph::hasLoop() const {
    return std::any_of(edges.begin(), edges.end(), [](const Edge& e) { return e.u == e.v; });
}

const Edge& MultiGraph::edgeById(int id) const {
    for (const auto& e : edges)
        if (e.id == id)
            return e;
    throw InvalidInput("no edge with id " + std::to_string(id));
}

MultiGraph fromEdgeList(int vertexCount, const std::vector<std::pair<int, int>>& endpoints) {
    MultiGraph g;
    g.vertexCount = vertexCount;
    for (auto [u, v] : endpoints)
        g.addEdge(u, v);
    g.validate();
    return g;
}

bool allDegreesEven(const MultiGraph& g) {
    const auto deg = g.degrees();
    return std::all_of(deg.begin(), deg.end(), [](int d) { return d % 2 == 0; });
}

Eulerization eulerize(const MultiGraph& g) {
    g.validate();
    if (g.edges.empty())
        throw InvalidInput("cannot eulerize a graph without edges");
    requireConnected(g);

    const auto deg = g.degrees();
    std::vector<int> odd;
    for (int v = 0; v < g.vertexCount; ++v)
        if (deg[v] % 2 == 1)
            odd.push_back(v);
    if (static_cast<int>(odd.size()) > kMaxOddVertices)
        throw LimitExceeded("eulerize supports at most " + std::to_string(kMaxOddVertices) + " odd-degree vertices");

    Eulerization out;
    out.result = g;
    if (odd.empty())
        return out;

    std::vector<int> depth, parentEdgeId;
    const std::vector<int> parent = bfsTree(g, 0, depth, parentEdgeId);
    auto treeDistance = [&](int a, int b) {
        int len = 0;
        while (a != b) {
            if (depth[a] >= depth[b])
                a = parent[a];
            else
                b = parent[b];
            ++len;
        }
        return len;
    };

    // Minimum-cost perfect matching of the odd vertices under tree distance.
    const int m = static_cast<int>(odd.size());
    std::vector<std::vector<int>> dist(m, std::vector<int>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            dist[i][j] = dist[j][i] = treeDistance(odd[i], odd[j]);

    const std::size_t full = std::size_t{1} << m;
    constexpr int inf = std::numeric_limits<int>::max() / 2;
    std::vector<int> best(full, inf), choice(full, -1);
    best[0] = 0;
    for (std::size_t mask = 1; mask < full; ++mask) {
        if (std::popcount(mask) % 2 != 0)
            continue;
        const int i = std::countr_zero(mask);
        for (int j = i + 1; j < m; ++j) {
            if (!(mask & (std::size_t{1} << j)))
                continue;
            const std::size_t rest = mask & ~(std::size_t{1} << i) & ~(std::size_t{1} << j);
            if (best[rest] + dist[i][j] < best[mask]) {
                best[mask] = best[rest] + dist[i][j];
                choice[mask] = j;
            }
        }
    }

    std::set<int> doubled;
    for (std::size_t mask = full - 1; mask;) {
        const int i = std::countr_zero(mask);
        const int j = choice[mask];
        const Cycle path = treePath(odd[i], odd[j], parent, depth, parentEdgeId);
        for (int id : path.edges)
            if (!doubled.insert(id).second)
                throw std::logic_error("minimal odd-vertex pairing produced overlapping tree paths");
        mask &= ~(std::size_t{1} << i) & ~(std::size_t{1} << j);
    }

    int nextId = 0;
    for (const auto& e : g.edges)
        nextId = std::max(nextId, e.id + 1);
    out.duplicatedEdgeIds.assign(doubled.begin(), doubled.end());
    for (int id : out.duplicatedEdgeIds) {
        const Edge& e = g.edgeById(id);
        out.result.edges.push_back({e.u, e.v, nextId++});
    }
    return out;
}

MultiGraph lineGraph(const MultiGraph& g) {
    g.validate();
    MultiGraph line;
    line.vertexCount = static_cast<int>(g.edges.size());
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const Edge& a = g.edges[i];
        for (std::size_t j = i + 1; j < g.edges.size(); ++j) {
            const Edge& b = g.edges[j];
            if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v)
                line.addEdge(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return line;
}

Decomposition decomposeEven(const MultiGraph& g) {
    g.validate();
    requireLoopFree(g);
    if (g.edges.size() % 2 != 0)
        throw InvalidInput("decomposeEven needs an even number of edges");
    requireConnected(g);
    Decomposition d;
    if (g.edges.empty())
        return d;
    const int anchor = std::min(g.edges.front().u, g.edges.front().v);
    if (peelTwoPaths(g.vertexCount, g.edges, anchor, d.twoPaths))
        throw std::logic_error("even peeling left an unpaired edge");
    return d;
}

Decomposition decomposeOddAnchored(const MultiGraph& g, int anchor) {
    g.validate();
    requireLoopFree(g);
    if (g.edges.size() % 2 == 0)
        throw InvalidInput("decomposeOddAnchored needs an odd number of edges");
    if (anchor < 0 || anchor >= g.vertexCount)
        throw InvalidInput("anchor vertex " + std::to_string(anchor) + " out of range");
    requireConnected(g);
    Decomposition d;
    d.leftoverEdge = peelTwoPaths(g.vertexCount, g.edges, anchor, d.twoPaths);
    return d;
}

std::vector<Cycle> evenCycles(const MultiGraph& g) {
    std::vector<Cycle> found;
    std::set<std::vector<int>> seen;
    auto record = [&](Cycle c) {
        if (c.edges.size() % 2 == 0 && seen.insert(sortedIds(c)).second)
            found.push_back(std::move(c));
    };

    // Fundamental cycles of a BFS tree.
    std::vector<int> depth, parentEdgeId;
    const std::vector<int> parent = bfsTree(g, 0, depth, parentEdgeId);
    std::set<int> treeIds(parentEdgeId.begin(), parentEdgeId.end());
    for (const auto& e : g.edges) {
        if (e.u == e.v || treeIds.count(e.id) || depth[e.u] < 0)
            continue;
        // Walk: e.u -(e)- e.v, then the tree path back to e.u.
        const Cycle path = treePath(e.v, e.u, parent, depth, parentEdgeId);
        Cycle c;
        c.vertices.push_back(e.u);
        c.vertices.insert(c.vertices.end(), path.vertices.begin(), path.vertices.end() - 1);
        c.edges.push_back(e.id);
        c.edges.insert(c.edges.end(), path.edges.begin(), path.edges.end());
        record(std::move(c));
    }

    // Exhaustive simple cycles, each rooted at its smallest vertex.
    const auto adj = incidences(g.vertexCount, g.edges);
    long steps = 0;
    bool exhausted = false;
    std::vector<bool> onPath(g.vertexCount, false);
    std::vector<int> pathVertices, pathEdges;
    auto dfs = [&](auto&& self, int start, int x) -> void {
        for (const auto& inc : adj[x]) {
            if (exhausted)
                return;
            if (++steps > kCycleSearchBudget) {
                exhausted = true;
                return;
            }
            const int edgeId = g.edges[inc.edge].id;
            if (inc.other == x)
                continue;
            if (inc.other == start) {
                if (pathEdges.empty() || pathEdges.front() == edgeId)
                    continue;
                Cycle c{pathVertices, pathEdges};
                c.edges.push_back(edgeId);
                record(std::move(c));
                continue;
            }
            if (inc.other < start || onPath[inc.other])
                continue;
            onPath[inc.other] = true;
            pathVertices.push_back(inc.other);
            pathEdges.push_back(edgeId);
            self(self, start, inc.other);
            pathVertices.pop_back();
            pathEdges.pop_back();
            onPath[inc.other] = false;
        }
    };
    for (int s = 0; s < g.vertexCount && !exhausted; ++s) {
        onPath[s] = true;
        pathVertices = {s};
        pathEdges.clear();
        dfs(dfs, s, s);
        onPath[s] = false;
    }
    if (exhausted && found.empty())
        throw LimitExceeded("even-cycle search budget exhausted");
    return found;
}

Decomposition decomposeWithClaw(const MultiGraph& g) {
    g.validate();
    requireLoopFree(g);
    requireConnected(g);

    const std::vector<Cycle> cycles = evenCycles(g);
    if (cycles.empty())
        throw PreconditionViolated("graph contains no even cycle");
    if (g.edges.size() % 2 == 0)
        return decomposeEven(g);

    for (const Cycle& cycle : cycles) {
        const std::set<int> onCycle(cycle.edges.begin(), cycle.edges.end());
        std::vector<Edge> rest;
        for (const auto& e : g.edges)
            if (!onCycle.count(e.id))
                rest.push_back(e);

        UnionFind uf(g.vertexCount);
        for (const auto& e : rest)
            uf.unite(e.u, e.v);
        std::map<int, std::vector<Edge>> pieces;
        for (const auto& e : rest)
            pieces[uf.find(e.u)].push_back(e);

        const int len = static_cast<int>(cycle.vertices.size());
        for (const auto& [root, piece] : pieces) {
            if (piece.size() % 2 == 0)
                continue;
            for (int pos = 0; pos < len; ++pos) {
                const int v = cycle.vertices[pos];
                if (uf.find(v) != root)
                    continue;
                const int before = cycle.edges[(pos + len - 1) % len];
                const int after = cycle.edges[pos];

                Decomposition d;
                const std::optional<int> leftover = peelTwoPaths(g.vertexCount, piece, v, d.twoPaths);
                if (!leftover)
                    throw std::logic_error("odd component peeled without a leftover edge");

                auto otherEnd = [&](int id) {
                    const Edge& e = g.edgeById(id);
                    return e.u == v ? e.v : e.u;
                };
                const int a = otherEnd(*leftover), b = otherEnd(before), c = otherEnd(after);
                if (a == b || a == c || b == c)
                    continue;
                d.claw = std::array<int, 3>{*leftover, before, after};

                std::set<int> used{*leftover, before, after};
                for (auto [x, y] : d.twoPaths) {
                    used.insert(x);
                    used.insert(y);
                }
                std::vector<Edge> remainder;
                for (const auto& e : g.edges)
                    if (!used.count(e.id))
                        remainder.push_back(e);
                if (!remainder.empty()) {
                    const int anchor = std::min(remainder.front().u, remainder.front().v);
                    if (peelTwoPaths(g.vertexCount, remainder, anchor, d.twoPaths))
                        throw std::logic_error("even remainder left an unpaired edge");
                }
                return d;
            }
        }
    }
    throw PreconditionViolated("no even cycle admits a claw with three distinct leaves");
}

} // namespace patrol::graph
