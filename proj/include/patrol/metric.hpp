#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace patrol {

using SiteId = int;
using SiteSet = std::vector<SiteId>;

/// Finite metric space over n sites. Immutable once constructed; build it
/// through fromPoints() or fromMatrix(), which validate every invariant.
class MetricSpace {
public:
    static constexpr double kRelativeTolerance = 1e-9;

    int size() const noexcept { return n_; }
    double operator()(SiteId i, SiteId j) const { return dist_[static_cast<std::size_t>(i) * n_ + j]; }

    const std::vector<std::string>& labels() const noexcept { return labels_; }
    /// Coordinates when the space came from points; empty otherwise.
    const std::vector<std::vector<double>>& points() const noexcept { return points_; }
    bool euclidean() const noexcept { return !points_.empty(); }

    /// True when every off-diagonal distance is an integer (within tolerance).
    bool isInteger() const;
    double maxDistance() const;

    std::vector<std::vector<double>> matrix() const;

    MetricSpace withLabels(std::vector<std::string> labels) const;

private:
    friend MetricSpace fromPoints(const std::vector<std::vector<double>>&);
    friend MetricSpace fromMatrix(const std::vector<std::vector<double>>&);

    MetricSpace() = default;

    int n_ = 0;
    std::vector<double> dist_;
    std::vector<std::string> labels_;
    std::vector<std::vector<double>> points_;
};

/// Euclidean metric over the given points. Coincident points are rejected.
MetricSpace fromPoints(const std::vector<std::vector<double>>& points);

/// Validates an explicit distance matrix. Throws MetricViolation naming the
/// offending pair or triple.
MetricSpace fromMatrix(const std::vector<std::vector<double>>& matrix);

/// Integer metric subdivided so every edge has unit length. Nodes
/// [0, originalCount) are the original sites; the rest are dummies.
struct UnitGraph {
    int originalCount = 0;
    int totalCount = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adjacency;
};

/// Joins every site pair at distance D by a private path of D unit edges.
UnitGraph subdivideInteger(const MetricSpace& space);

/// All-pairs hop distances from each node (BFS).
std::vector<int> bfsDistances(const UnitGraph& graph, int source);

/// Validates that `subset` holds distinct in-range site indices.
void checkSubset(const MetricSpace& space, std::span<const SiteId> subset);

} // namespace patrol
