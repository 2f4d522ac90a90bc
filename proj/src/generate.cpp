#include "patrol/generate.hpp"

#include "patrol/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>

namespace patrol::gen {

std::uint64_t seedFromEnv(std::uint64_t fallback) {
    const char* raw = std::getenv("PATROL_SEED");
    if (!raw || !*raw)
        return fallback;
    try {
        return std::stoull(raw);
    } catch (const std::exception&) {
        throw InvalidInput(std::string("PATROL_SEED is not an unsigned integer: ") + raw);
    }
}

std::vector<std::vector<double>> randomPoints(int n, int dim, double extent, Rng& rng) {
    if (n < 1 || dim < 1)
        throw InvalidInput("need n >= 1 and dim >= 1");
    std::uniform_real_distribution<double> coord(0.0, extent);
    std::vector<std::vector<double>> pts;
    std::set<std::vector<double>> seen;
    while (static_cast<int>(pts.size()) < n) {
        std::vector<double> p(dim);
        for (auto& c : p)
            c = coord(rng);
        if (seen.insert(p).second)
            pts.push_back(std::move(p));
    }
    return pts;
}

std::vector<std::vector<double>> randomIntegerMetric(int n, int maxWeight, Rng& rng) {
    if (n < 1 || maxWeight < 1)
        throw InvalidInput("need n >= 1 and maxWeight >= 1");
    std::uniform_int_distribution<int> weight(1, maxWeight);
    std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            d[i][j] = d[j][i] = weight(rng);
    for (int m = 0; m < n; ++m)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][m] + d[m][j]);
    return d;
}

graph::MultiGraph randomConnectedGraph(int vertices, int edges, bool allowParallel, Rng& rng) {
    if (vertices < 1 || edges < vertices - 1)
        throw InvalidInput("a connected graph on " + std::to_string(vertices) + " vertices needs at least " +
                           std::to_string(vertices - 1) + " edges");
    const long simpleMax = static_cast<long>(vertices) * (vertices - 1) / 2;
    if (!allowParallel && edges > simpleMax)
        throw InvalidInput("too many edges for a simple graph");
    if (vertices == 1 && edges > 0)
        throw InvalidInput("a single vertex cannot carry loop-free edges");

    graph::MultiGraph g;
    g.vertexCount = vertices;
    std::set<std::pair<int, int>> used;
    auto add = [&](int a, int b) {
        if (a > b)
            std::swap(a, b);
        used.insert({a, b});
        g.addEdge(a, b);
    };
    std::vector<int> order(vertices);
    for (int i = 0; i < vertices; ++i)
        order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    for (int i = 1; i < vertices; ++i) {
        std::uniform_int_distribution<int> pick(0, i - 1);
        add(order[pick(rng)], order[i]);
    }
    std::uniform_int_distribution<int> vertex(0, vertices - 1);
    while (static_cast<int>(g.edges.size()) < edges) {
        int a = vertex(rng), b = vertex(rng);
        if (a == b)
            continue;
        if (!allowParallel && used.count({std::min(a, b), std::max(a, b)}))
            continue;
        add(a, b);
    }
    return g;
}

} // namespace patrol::gen
