#include "patrol/metric.hpp"

#include "patrol/error.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>

namespace patrol {

namespace {

bool nearlyInteger(double x) {
    return std::abs(x - std::round(x)) <= MetricSpace::kRelativeTolerance * std::max(1.0, std::abs(x));
}

} // namespace

bool MetricSpace::isInteger() const {
    return std::all_of(dist_.begin(), dist_.end(), nearlyInteger);
}

double MetricSpace::maxDistance() const {
    return dist_.empty() ? 0.0 : *std::max_element(dist_.begin(), dist_.end());
}

std::vector<std::vector<double>> MetricSpace::matrix() const {
    std::vector<std::vector<double>> out(n_, std::vector<double>(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            out[i][j] = (*this)(i, j);
    return out;
}

MetricSpace MetricSpace::withLabels(std::vector<std::string> labels) const {
    if (!labels.empty() && static_cast<int>(labels.size()) != n_)
        throw InvalidInput("label count " + std::to_string(labels.size()) + " does not match site count " +
                           std::to_string(n_));
    MetricSpace copy = *this;
    copy.labels_ = std::move(labels);
    return copy;
}

MetricSpace fromPoints(const std::vector<std::vector<double>>& points) {
    if (points.empty())
        throw InvalidInput("point list is empty");
    const std::size_t dim = points.front().size();
    if (dim == 0)
        throw InvalidInput("points must have dimension >= 1");
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].size() != dim)
            throw InvalidInput("point " + std::to_string(i) + " has dimension " + std::to_string(points[i].size()) +
                               ", expected " + std::to_string(dim));
        for (double c : points[i])
            if (!std::isfinite(c))
                throw InvalidInput("point " + std::to_string(i) + " has a non-finite coordinate");
    }

    const int n = static_cast<int>(points.size());
    std::vector<std::vector<double>> matrix(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            double sq = 0.0;
            for (std::size_t c = 0; c < dim; ++c) {
                const double delta = points[i][c] - points[j][c];
                sq += delta * delta;
            }
            matrix[i][j] = matrix[j][i] = std::sqrt(sq);
        }
    }
    MetricSpace space = fromMatrix(matrix);
    space.points_ = points;
    return space;
}

MetricSpace fromMatrix(const std::vector<std::vector<double>>& matrix) {
    const int n = static_cast<int>(matrix.size());
    if (n == 0)
        throw InvalidInput("distance matrix is empty");
    for (int i = 0; i < n; ++i)
        if (static_cast<int>(matrix[i].size()) != n)
            throw InvalidInput("distance matrix is not square (row " + std::to_string(i) + ")");

    auto violation = [](const std::string& msg, int i, int j, int m) {
        std::ostringstream os;
        os << msg << " at (" << i << ", " << j << ", " << m << ")";
        return MetricViolation(os.str(), i, j, m);
    };

    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double d = matrix[i][j];
            if (!std::isfinite(d))
                throw violation("non-finite distance", i, j, j);
            if (i == j && d != 0.0)
                throw violation("nonzero diagonal", i, i, i);
            if (d < 0.0)
                throw violation("negative distance", i, j, j);
            if (i != j && d == 0.0)
                throw violation("zero distance between distinct sites", i, j, j);
            if (matrix[j][i] != d)
                throw violation("asymmetric distance", i, j, j);
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int m = 0; m < n; ++m) {
                if (m == i || m == j)
                    continue;
                const double via = matrix[i][m] + matrix[m][j];
                if (matrix[i][j] > via * (1.0 + MetricSpace::kRelativeTolerance))
                    throw violation("triangle inequality violated", i, j, m);
            }

    MetricSpace space;
    space.n_ = n;
    space.dist_.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : matrix)
        space.dist_.insert(space.dist_.end(), row.begin(), row.end());
    return space;
}

UnitGraph subdivideInteger(const MetricSpace& space) {
    const int n = space.size();
    UnitGraph g;
    g.originalCount = n;
    g.totalCount = n;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double d = space(i, j);
            if (!nearlyInteger(d))
                throw InvalidInput("distance between sites " + std::to_string(i) + " and " + std::to_string(j) +
                                   " is not an integer");
            const int hops = static_cast<int>(std::lround(d));
            int prev = i;
            for (int step = 1; step < hops; ++step) {
                const int dummy = g.totalCount++;
                g.edges.emplace_back(prev, dummy);
                prev = dummy;
            }
            g.edges.emplace_back(prev, j);
        }
    }
    g.adjacency.assign(g.totalCount, {});
    for (auto [u, v] : g.edges) {
        g.adjacency[u].push_back(v);
        g.adjacency[v].push_back(u);
    }
    for (auto& nbrs : g.adjacency)
        std::sort(nbrs.begin(), nbrs.end());
    return g;
}

std::vector<int> bfsDistances(const UnitGraph& graph, int source) {
    std::vector<int> dist(graph.totalCount, -1);
    std::queue<int> frontier;
    dist[source] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
        const int u = frontier.front();
        frontier.pop();
        for (int v : graph.adjacency[u])
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                frontier.push(v);
            }
    }
    return dist;
}

void checkSubset(const MetricSpace& space, std::span<const SiteId> subset) {
    std::vector<bool> seen(space.size(), false);
    for (SiteId s : subset) {
        if (s < 0 || s >= space.size())
            throw InvalidInput("site index " + std::to_string(s) + " out of range [0, " +
                               std::to_string(space.size()) + ")");
        if (seen[s])
            throw InvalidInput("site index " + std::to_string(s) + " repeated in subset");
        seen[s] = true;
    }
}

} // namespace patrol
