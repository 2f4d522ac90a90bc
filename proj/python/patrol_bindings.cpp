#include "patrol/decider.hpp"
#include "patrol/error.hpp"
#include "patrol/graphdecomp.hpp"
#include "patrol/solver.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace patrol;

namespace {

py::dict solutionDict(const CyclicSolution& s) {
    py::list tours;
    for (const auto& t : s.tours)
        tours.append(py::dict(py::arg("order") = t.order, py::arg("length") = t.length));
    return py::dict(py::arg("latency") = s.latency, py::arg("parts") = s.partition.parts,
                    py::arg("robots") = s.robots, py::arg("tours") = tours, py::arg("k") = s.robotCount());
}

py::dict decompositionDict(const graph::Decomposition& d) {
    py::dict out;
    out["two_paths"] = d.twoPaths;
    out["claw"] = d.claw ? py::cast(*d.claw) : py::none();
    out["leftover_edge"] = d.leftoverEdge ? py::cast(*d.leftoverEdge) : py::none();
    return out;
}

py::list configurations(const std::vector<Configuration>& cs) {
    py::list out;
    for (const auto& c : cs)
        out.append(py::dict(py::arg("positions") = c.positions, py::arg("since_visit") = c.sinceVisit));
    return out;
}

graph::MultiGraph toGraph(int vertices, const std::vector<std::pair<int, int>>& edges) {
    return graph::fromEdgeList(vertices, edges);
}

} // namespace

PYBIND11_MODULE(_patrol, m) {
    m.doc() = "Cyclic multi-robot patrol scheduling on finite metric spaces.";

    // Later registrations are tried first, so bases go before subclasses.
    auto error = py::register_exception<Error>(m, "Error");
    auto invalid = py::register_exception<InvalidInput>(m, "InvalidInput", error);
    py::register_exception<LimitExceeded>(m, "LimitExceeded", error);
    py::register_exception<MetricViolation>(m, "MetricViolation", invalid);
    py::register_exception<InfeasibleAssignment>(m, "InfeasibleAssignment", invalid);
    py::register_exception<NotConnected>(m, "NotConnected", invalid);
    py::register_exception<PreconditionViolated>(m, "PreconditionViolated", invalid);

    py::class_<MetricSpace>(m, "MetricSpace")
        .def_static("from_points", &fromPoints, py::arg("points"))
        .def_static("from_matrix", &fromMatrix, py::arg("matrix"))
        .def("__len__", &MetricSpace::size)
        .def("__call__", [](const MetricSpace& s, int i, int j) {
            if (i < 0 || j < 0 || i >= s.size() || j >= s.size())
                throw py::index_error("site index out of range");
            return s(i, j);
        })
        .def("matrix", &MetricSpace::matrix)
        .def_property_readonly("is_integer", &MetricSpace::isInteger)
        .def_property_readonly("euclidean", &MetricSpace::euclidean);

    m.def(
        "solve",
        [](const MetricSpace& s, int k, double epsilon, const std::string& tsp, bool parallel) {
            SolverConfig cfg;
            cfg.k = k;
            cfg.epsilon = epsilon;
            cfg.tsp = parseTspAlgorithm(tsp);
            cfg.parallel = parallel;
            CyclicSolution out;
            {
                py::gil_scoped_release release;
                out = solve(s, cfg);
            }
            return solutionDict(out);
        },
        py::arg("space"), py::arg("k"), py::arg("epsilon") = 1.0, py::arg("tsp") = "exact",
        py::arg("parallel") = false);

    m.def(
        "brute_force_cyclic", [](const MetricSpace& s, int k) { return solutionDict(bruteForceCyclic(s, k)); },
        py::arg("space"), py::arg("k"));

    m.def(
        "evaluate",
        [](const MetricSpace& s, const std::vector<SiteSet>& parts, int k, const std::string& tsp) {
            return solutionDict(evaluate(s, makePartition(parts, s.size()), k, parseTspAlgorithm(tsp)));
        },
        py::arg("space"), py::arg("parts"), py::arg("k"), py::arg("tsp") = "exact");

    m.def(
        "assign_robots", [](const std::vector<double>& lengths, int k) { return assignRobots(lengths, k); },
        py::arg("lengths"), py::arg("k"));

    m.def(
        "decide",
        [](const MetricSpace& s, int k, int ell) {
            Decision d;
            {
                py::gil_scoped_release release;
                d = decide(s, k, ell);
            }
            py::dict out;
            out["answer"] = d.answer;
            out["states_visited"] = d.statesVisited;
            if (d.witness)
                out["witness"] = py::dict(py::arg("prefix") = configurations(d.witness->prefix),
                                          py::arg("cycle") = configurations(d.witness->cycle));
            else
                out["witness"] = py::none();
            return out;
        },
        py::arg("space"), py::arg("k"), py::arg("ell"));

    m.def("minimal_latency", &minimalLatency, py::arg("space"), py::arg("k"),
          py::call_guard<py::gil_scoped_release>());

    m.def(
        "eulerize",
        [](int vertices, const std::vector<std::pair<int, int>>& edges) {
            const auto e = graph::eulerize(toGraph(vertices, edges));
            std::vector<std::pair<int, int>> all;
            for (const auto& x : e.result.edges)
                all.emplace_back(x.u, x.v);
            return py::dict(py::arg("duplicated_edge_ids") = e.duplicatedEdgeIds, py::arg("edges") = all);
        },
        py::arg("vertices"), py::arg("edges"));

    m.def(
        "decompose_even",
        [](int vertices, const std::vector<std::pair<int, int>>& edges) {
            return decompositionDict(graph::decomposeEven(toGraph(vertices, edges)));
        },
        py::arg("vertices"), py::arg("edges"));

    m.def(
        "decompose_odd_anchored",
        [](int vertices, const std::vector<std::pair<int, int>>& edges, int anchor) {
            return decompositionDict(graph::decomposeOddAnchored(toGraph(vertices, edges), anchor));
        },
        py::arg("vertices"), py::arg("edges"), py::arg("anchor"));

    m.def(
        "decompose_with_claw",
        [](int vertices, const std::vector<std::pair<int, int>>& edges) {
            return decompositionDict(graph::decomposeWithClaw(toGraph(vertices, edges)));
        },
        py::arg("vertices"), py::arg("edges"));
}
