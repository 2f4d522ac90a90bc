#include "oracles.hpp"

#include "patrol/error.hpp"
#include "patrol/generate.hpp"
#include "patrol/graphdecomp.hpp"

#include <doctest.h>

using namespace patrol;
using namespace patrol::graph;

namespace {

MultiGraph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        e.emplace_back(i, (i + 1) % n);
    return fromEdgeList(n, e);
}

int degreeOneCount(const MultiGraph& g) {
    const auto deg = g.degrees();
    return static_cast<int>(std::count(deg.begin(), deg.end(), 1));
}

bool incidentTo(const MultiGraph& g, int edgeId, int v) {
    const Edge& e = g.edgeById(edgeId);
    return e.u == v || e.v == v;
}

} // namespace

TEST_CASE("eulerize examples") {
    const auto path = fromEdgeList(3, {{0, 1}, {1, 2}});
    const auto p = eulerize(path);
    CHECK(p.duplicatedEdgeIds == std::vector<int>{0, 1});
    CHECK(allDegreesEven(p.result));

    const auto c4 = eulerize(cycle(4));
    CHECK(c4.duplicatedEdgeIds.empty());
    CHECK(c4.result.edges.size() == 4);

    const auto pendant = fromEdgeList(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
    const auto t = eulerize(pendant);
    CHECK(t.duplicatedEdgeIds.size() <= 3);
    CHECK(allDegreesEven(t.result));
    CHECK(t.result.connected());
}

TEST_CASE("eulerize errors") {
    CHECK_THROWS_AS(eulerize(fromEdgeList(3, {{0, 1}})), NotConnected);
    CHECK_THROWS_AS(eulerize(fromEdgeList(1, {})), InvalidInput);
    CHECK_THROWS_AS(fromEdgeList(2, {{0, 2}}), InvalidInput);
}

TEST_CASE("property: eulerization tiers on random multigraphs") {
    gen::Rng rng(51);
    for (int trial = 0; trial < 200; ++trial) {
        const int v = 2 + static_cast<int>(rng() % 7);
        const int e = (v - 1) + static_cast<int>(rng() % (13 - (v - 1)));
        const auto g = gen::randomConnectedGraph(v, e, true, rng);
        const auto out = eulerize(g);
        CHECK(allDegreesEven(out.result));
        CHECK(oracle::connectedOverVertices(out.result));
        const int dup = static_cast<int>(out.duplicatedEdgeIds.size());
        const int ones = degreeOneCount(g);
        const int tier = ones == 0 ? e - 2 : ones == 1 ? e - 1 : e;
        CHECK(dup <= tier);
        CHECK(out.result.edges.size() == g.edges.size() + out.duplicatedEdgeIds.size());
    }
}

TEST_CASE("line graph examples") {
    const auto tri = lineGraph(cycle(3));
    CHECK(tri.vertexCount == 3);
    CHECK(tri.edges.size() == 3);

    const auto claw = lineGraph(fromEdgeList(4, {{0, 1}, {0, 2}, {0, 3}}));
    CHECK(claw.vertexCount == 3);
    CHECK(claw.edges.size() == 3);

    const auto path = lineGraph(fromEdgeList(4, {{0, 1}, {1, 2}, {2, 3}}));
    CHECK(path.vertexCount == 3);
    CHECK(path.edges.size() == 2);

    // Parallel edges share both endpoints yet give a single line-graph edge.
    const auto twin = lineGraph(fromEdgeList(2, {{0, 1}, {0, 1}}));
    CHECK(twin.edges.size() == 1);
}

TEST_CASE("property: line graph degree identity on simple graphs") {
    gen::Rng rng(52);
    for (int trial = 0; trial < 50; ++trial) {
        const int v = 3 + static_cast<int>(rng() % 5);
        const int maxE = v * (v - 1) / 2;
        const int e = (v - 1) + static_cast<int>(rng() % (maxE - v + 2));
        const auto g = gen::randomConnectedGraph(v, e, false, rng);
        const auto line = lineGraph(g);
        const auto deg = g.degrees();
        const auto lineDeg = line.degrees();
        for (std::size_t i = 0; i < g.edges.size(); ++i)
            CHECK(lineDeg[i] == deg[g.edges[i].u] + deg[g.edges[i].v] - 2);
    }
}

TEST_CASE("decomposeEven examples") {
    const auto path = fromEdgeList(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    const auto p = decomposeEven(path);
    CHECK(p.twoPaths.size() == 2);
    CHECK(oracle::checkDecomposition(path, p).empty());

    const auto c4 = cycle(4);
    const auto d4 = decomposeEven(c4);
    CHECK(d4.twoPaths.size() == 2);
    CHECK(oracle::checkDecomposition(c4, d4).empty());

    const auto bowtie = fromEdgeList(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
    const auto b = decomposeEven(bowtie);
    CHECK(b.twoPaths.size() == 3);
    CHECK(oracle::checkDecomposition(bowtie, b).empty());
}

TEST_CASE("decomposeEven errors") {
    CHECK_THROWS_AS(decomposeEven(cycle(3)), InvalidInput);
    CHECK_THROWS_AS(decomposeEven(fromEdgeList(4, {{0, 1}, {2, 3}})), NotConnected);
    CHECK_THROWS_AS(decomposeEven(fromEdgeList(2, {{0, 0}, {0, 1}})), InvalidInput);
}

TEST_CASE("decomposeOddAnchored examples") {
    const auto single = fromEdgeList(2, {{0, 1}});
    const auto s = decomposeOddAnchored(single, 1);
    CHECK(s.twoPaths.empty());
    CHECK(s.leftoverEdge == 0);

    const auto tri = cycle(3);
    for (int v = 0; v < 3; ++v) {
        const auto d = decomposeOddAnchored(tri, v);
        CHECK(d.twoPaths.size() == 1);
        REQUIRE(d.leftoverEdge);
        CHECK(incidentTo(tri, *d.leftoverEdge, v));
        CHECK(oracle::checkDecomposition(tri, d).empty());
    }

    const auto star = fromEdgeList(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
    const auto d = decomposeOddAnchored(star, 0);
    CHECK(d.twoPaths.size() == 2);
    REQUIRE(d.leftoverEdge);
    CHECK(incidentTo(star, *d.leftoverEdge, 0));
    CHECK(oracle::checkDecomposition(star, d).empty());

    CHECK_THROWS_AS(decomposeOddAnchored(cycle(4), 0), InvalidInput);
    CHECK_THROWS_AS(decomposeOddAnchored(tri, 5), InvalidInput);
}

TEST_CASE("property: 2-path decompositions of random connected multigraphs") {
    gen::Rng rng(53);
    for (int trial = 0; trial < 300; ++trial) {
        const int v = 2 + static_cast<int>(rng() % 7);
        const int e = (v - 1) + static_cast<int>(rng() % 8);
        const auto g = gen::randomConnectedGraph(v, e, true, rng);
        if (e % 2 == 0) {
            const auto d = decomposeEven(g);
            CHECK(oracle::checkDecomposition(g, d) == "");
            CHECK(!d.leftoverEdge);
        } else {
            for (int anchor = 0; anchor < v; ++anchor) {
                const auto d = decomposeOddAnchored(g, anchor);
                CHECK(oracle::checkDecomposition(g, d) == "");
                REQUIRE(d.leftoverEdge);
                CHECK(incidentTo(g, *d.leftoverEdge, anchor));
            }
        }
    }
}

TEST_CASE("decomposeWithClaw examples") {
    // 4-cycle 0-1-2-3 with a pendant edge at 0.
    const auto kite = fromEdgeList(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
    const auto k = decomposeWithClaw(kite);
    REQUIRE(k.claw);
    CHECK(k.twoPaths.size() == 1);
    for (int id : *k.claw)
        CHECK(incidentTo(kite, id, 0));
    CHECK(oracle::checkDecomposition(kite, k).empty());

    const auto c4 = decomposeWithClaw(cycle(4));
    CHECK(!c4.claw);
    CHECK(c4.twoPaths.size() == 2);

    // 6-cycle with two pendant edges at vertex 0.
    auto hexEdges = std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 6}, {0, 7}};
    const auto hex = fromEdgeList(8, hexEdges);
    const auto h = decomposeWithClaw(hex);
    CHECK(!h.claw);
    CHECK(h.twoPaths.size() == 4);
    CHECK(oracle::checkDecomposition(hex, h).empty());
}

TEST_CASE("decomposeWithClaw preconditions") {
    CHECK_THROWS_AS(decomposeWithClaw(cycle(3)), PreconditionViolated);
    CHECK_THROWS_AS(decomposeWithClaw(fromEdgeList(3, {{0, 1}, {1, 2}, {2, 0}, {0, 1}, {0, 1}})),
                    PreconditionViolated); // only even cycles are 2-cycles
    CHECK_THROWS_AS(decomposeWithClaw(fromEdgeList(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})), NotConnected);
}

TEST_CASE("even cycles beyond fundamental cycles are found") {
    // K4 minus an edge: BFS from 0 can leave only odd fundamental cycles,
    // but the outer 4-cycle 0-1-2-3 is even.
    const auto diamond = fromEdgeList(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
    const auto cycles = evenCycles(diamond);
    REQUIRE(!cycles.empty());
    for (const auto& c : cycles) {
        CHECK(c.edges.size() % 2 == 0);
        CHECK(c.vertices.size() == c.edges.size());
    }
    const auto d = decomposeWithClaw(diamond);
    CHECK(oracle::checkDecomposition(diamond, d).empty());
    CHECK(d.claw);
}

TEST_CASE("property: claw decompositions of random simple graphs") {
    gen::Rng rng(54);
    int withClaw = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int v = 4 + static_cast<int>(rng() % 5);
        const int maxE = std::min(12, v * (v - 1) / 2);
        const int e = v + static_cast<int>(rng() % (maxE - v + 1));
        const auto g = gen::randomConnectedGraph(v, e, false, rng);
        Decomposition d;
        try {
            d = decomposeWithClaw(g);
        } catch (const PreconditionViolated&) {
            continue; // only odd cycles
        }
        CHECK(oracle::checkDecomposition(g, d) == "");
        CHECK(d.claw.has_value() == (e % 2 == 1));
        withClaw += d.claw.has_value();
    }
    CHECK(withClaw > 20);
}
