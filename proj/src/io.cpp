#include "patrol/io.hpp"

#include "patrol/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>

namespace patrol::io {

namespace {

template <class T>
T fieldAs(const Json& doc, const char* key) {
    try {
        return doc.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("field '") + key + "': " + e.what());
    }
}

Json configurationToJson(const Configuration& cfg) {
    return Json{{"positions", cfg.positions}, {"since_visit", cfg.sinceVisit}};
}

} // namespace

double round12(double x) {
    if (!std::isfinite(x) || x == 0.0)
        return x;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

MetricSpace parseInstance(const Json& doc) {
    if (!doc.is_object())
        throw InvalidInput("instance must be a JSON object");
    const bool hasPoints = doc.contains("points");
    const bool hasMatrix = doc.contains("matrix");
    if (hasPoints == hasMatrix)
        throw InvalidInput("instance needs exactly one of 'points' or 'matrix'");

    MetricSpace space = hasPoints ? fromPoints(fieldAs<std::vector<std::vector<double>>>(doc, "points"))
                                  : fromMatrix(fieldAs<std::vector<std::vector<double>>>(doc, "matrix"));
    if (doc.contains("labels"))
        space = space.withLabels(fieldAs<std::vector<std::string>>(doc, "labels"));
    return space;
}

MetricSpace loadInstance(const std::string& path) {
    return parseInstance(readJsonFile(path));
}

Json instanceToJson(const MetricSpace& space) {
    Json doc;
    if (space.euclidean()) {
        doc["points"] = space.points();
    } else {
        Json rows = Json::array();
        for (const auto& row : space.matrix()) {
            Json r = Json::array();
            for (double d : row)
                r.push_back(round12(d));
            rows.push_back(r);
        }
        doc["matrix"] = rows;
    }
    if (!space.labels().empty())
        doc["labels"] = space.labels();
    return doc;
}

Json solutionToJson(const CyclicSolution& solution) {
    Json tours = Json::array();
    for (const auto& t : solution.tours)
        tours.push_back(Json{{"order", t.order}, {"length", round12(t.length)}});
    return Json{{"latency", round12(solution.latency)},
                {"parts", solution.partition.parts},
                {"robots", solution.robots},
                {"tours", tours},
                {"k", solution.robotCount()}};
}

Json reportToJson(const CyclicSolution& solution, const SolverConfig& config) {
    Json doc = solutionToJson(solution);
    doc["gamma"] = round12(config.gamma());
    doc["epsilon"] = round12(config.epsilon);
    doc["bound"] = round12(config.bound());
    doc["tsp"] = std::string(tspName(config.tsp.kind));
    return doc;
}

CyclicSolution parseSolution(const Json& doc, const MetricSpace& space) {
    if (!doc.is_object())
        throw InvalidInput("solution must be a JSON object");
    CyclicSolution s;
    const Json& tours = doc.at("tours");
    std::vector<SiteSet> parts;
    for (const auto& t : tours) {
        Tour tour;
        tour.order = fieldAs<std::vector<SiteId>>(t, "order");
        checkSubset(space, tour.order);
        tour.length = tourLength(space, tour.order);
        parts.push_back(tour.order);
        s.tours.push_back(std::move(tour));
    }
    s.robots = fieldAs<std::vector<int>>(doc, "robots");
    if (s.robots.size() != s.tours.size())
        throw InvalidInput("solution has " + std::to_string(s.tours.size()) + " tours but " +
                           std::to_string(s.robots.size()) + " robot counts");
    for (int r : s.robots)
        if (r < 1)
            throw InvalidInput("every tour needs at least one robot");
    s.partition.parts = std::move(parts);
    for (auto& part : s.partition.parts)
        std::sort(part.begin(), part.end());
    makePartition(s.partition.parts, space.size()); // validates cover and disjointness
    std::vector<double> lengths;
    for (const auto& t : s.tours)
        lengths.push_back(t.length);
    s.latency = maxRatio(lengths, s.robots);
    return s;
}

graph::MultiGraph parseGraph(const Json& doc) {
    const int vertices = fieldAs<int>(doc, "vertices");
    const auto edges = fieldAs<std::vector<std::pair<int, int>>>(doc, "edges");
    return graph::fromEdgeList(vertices, edges);
}

Json graphToJson(const graph::MultiGraph& g) {
    Json edges = Json::array();
    for (const auto& e : g.edges)
        edges.push_back(Json::array({e.u, e.v}));
    return Json{{"vertices", g.vertexCount}, {"edges", edges}};
}

Json decompositionToJson(const graph::Decomposition& d) {
    Json paths = Json::array();
    for (auto [a, b] : d.twoPaths)
        paths.push_back(Json::array({a, b}));
    Json doc{{"two_paths", paths}, {"claw", nullptr}, {"leftover_edge", nullptr}};
    if (d.claw)
        doc["claw"] = *d.claw;
    if (d.leftoverEdge)
        doc["leftover_edge"] = *d.leftoverEdge;
    return doc;
}

Json eulerizationToJson(const graph::Eulerization& e) {
    Json doc = graphToJson(e.result);
    doc["duplicated_edge_ids"] = e.duplicatedEdgeIds;
    doc["eulerian"] = graph::allDegreesEven(e.result) && e.result.connected();
    return doc;
}

Json witnessToJson(const PeriodicWitness& witness, const UnitGraph& graph) {
    Json prefix = Json::array(), cycle = Json::array();
    for (const auto& c : witness.prefix)
        prefix.push_back(configurationToJson(c));
    for (const auto& c : witness.cycle)
        cycle.push_back(configurationToJson(c));
    Json edges = Json::array();
    for (auto [u, v] : graph.edges)
        edges.push_back(Json::array({u, v}));
    return Json{{"prefix", prefix},
                {"cycle", cycle},
                {"unit_graph", {{"original_count", graph.originalCount},
                                {"total_count", graph.totalCount},
                                {"edges", edges}}}};
}

Json readJsonFile(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput("'" + path + "' is not valid JSON: " + e.what());
    }
}

void writeJsonFile(const std::string& path, const Json& doc) {
    std::ofstream out(path);
    if (!out)
        throw InvalidInput("cannot write '" + path + "'");
    out << doc.dump(2) << '\n';
}

} // namespace patrol::io
