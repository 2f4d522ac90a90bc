#include "patrol/cli.hpp"

#include "patrol/decider.hpp"
#include "patrol/error.hpp"
#include "patrol/generate.hpp"
#include "patrol/io.hpp"
#include "patrol/svg.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace patrol::cli {

namespace {

using io::Json;

struct Options {
    std::string input;
    std::string solution;
    std::string svg;
    std::string witness;
    std::string tsp = "exact";
    std::string mode;
    std::string kind = "points";
    int k = 1;
    int ell = 1;
    int anchor = -1;
    int sites = 8;
    int dim = 2;
    int maxDistance = 3;
    double epsilon = 1.0;
    double extent = 100.0;
    bool parallel = false;
    std::uint64_t seed = 1;
};

Json doSolve(const Options& o) {
    const MetricSpace space = io::loadInstance(o.input);
    SolverConfig config;
    config.k = o.k;
    config.epsilon = o.epsilon;
    config.tsp = parseTspAlgorithm(o.tsp);
    config.parallel = o.parallel;
    if (config.k < 1)
        throw InvalidInput("k must be ≥ 1");
    const CyclicSolution solution = solve(space, config);
    if (!o.svg.empty())
        writeSvg(space, solution, o.svg);
    return io::reportToJson(solution, config);
}

Json doEvaluate(const Options& o, bool tspGiven, bool kGiven) {
    const MetricSpace space = io::loadInstance(o.input);
    const CyclicSolution given = io::parseSolution(io::readJsonFile(o.solution), space);
    if (!tspGiven)
        return io::solutionToJson(given);
    const int k = kGiven ? o.k : given.robotCount();
    return io::solutionToJson(evaluate(space, given.partition, k, parseTspAlgorithm(o.tsp)));
}

Json doOracle(const Options& o) {
    const MetricSpace space = io::loadInstance(o.input);
    return io::solutionToJson(bruteForceCyclic(space, o.k));
}

Json doDecide(const Options& o) {
    const MetricSpace space = io::loadInstance(o.input);
    const Decision d = decide(space, o.k, o.ell);
    if (!o.witness.empty() && d.witness) {
        const UnitGraph graph = o.k >= space.size() ? UnitGraph{space.size(), space.size(), {}, {}}
                                                    : subdivideInteger(space);
        io::writeJsonFile(o.witness, io::witnessToJson(*d.witness, graph));
    }
    return Json{{"answer", d.answer}, {"k", o.k}, {"ell", o.ell}, {"states_visited", d.statesVisited}};
}

Json doMinLatency(const Options& o) {
    const MetricSpace space = io::loadInstance(o.input);
    return Json{{"k", o.k}, {"min_latency", minimalLatency(space, o.k)}};
}

Json doDecompose(const Options& o, bool anchorGiven) {
    const graph::MultiGraph g = io::parseGraph(io::readJsonFile(o.input));
    if (o.mode == "eulerize")
        return io::eulerizationToJson(graph::eulerize(g));
    Json doc;
    if (o.mode == "even") {
        doc = io::decompositionToJson(graph::decomposeEven(g));
    } else if (o.mode == "odd-anchored") {
        if (!anchorGiven)
            throw InvalidInput("--anchor is required for odd-anchored mode");
        doc = io::decompositionToJson(graph::decomposeOddAnchored(g, o.anchor));
    } else if (o.mode == "claw") {
        doc = io::decompositionToJson(graph::decomposeWithClaw(g));
    } else {
        throw InvalidInput("unknown mode '" + o.mode + "'");
    }
    doc["mode"] = o.mode;
    return doc;
}

Json doGenerate(const Options& o, bool seedGiven) {
    gen::Rng rng(seedGiven ? o.seed : gen::seedFromEnv(o.seed));
    if (o.kind == "points")
        return Json{{"points", gen::randomPoints(o.sites, o.dim, o.extent, rng)}};
    if (o.kind == "integer")
        return Json{{"matrix", gen::randomIntegerMetric(o.sites, o.maxDistance, rng)}};
    throw InvalidInput("unknown instance kind '" + o.kind + "' (expected points or integer)");
}

int fail(std::ostream& out, std::ostream& err, int code, const std::string& message) {
    out << Json{{"error", message}}.dump() << '\n';
    err << "error: " << message << '\n';
    return code;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cyclic multi-robot patrol scheduling"};
    app.require_subcommand(1);
    Options o;

    auto* solveCmd = app.add_subcommand("solve", "approximate the best cyclic schedule");
    solveCmd->add_option("--input", o.input, "instance JSON")->required();
    solveCmd->add_option("--k", o.k, "robot count")->required();
    solveCmd->add_option("--epsilon", o.epsilon, "accuracy parameter");
    solveCmd->add_option("--tsp", o.tsp, "exact | tree-double | 2opt");
    solveCmd->add_flag("--parallel", o.parallel, "compute tours on all cores");
    solveCmd->add_option("--svg", o.svg, "also draw the solution (2-D points only)");

    auto* evalCmd = app.add_subcommand("evaluate", "recompute the latency of a reported solution");
    evalCmd->add_option("--input", o.input)->required();
    evalCmd->add_option("--solution", o.solution, "solution JSON from solve or oracle")->required();
    auto* evalTsp = evalCmd->add_option("--tsp", o.tsp, "re-tour each part instead of replaying tours");
    auto* evalK = evalCmd->add_option("--k", o.k, "robot count when re-touring");

    auto* oracleCmd = app.add_subcommand("oracle", "exact optimum over all partitions (small n)");
    oracleCmd->add_option("--input", o.input)->required();
    oracleCmd->add_option("--k", o.k)->required();

    auto* decideCmd = app.add_subcommand("decide", "exact decision for integer metrics");
    decideCmd->add_option("--input", o.input)->required();
    decideCmd->add_option("--k", o.k)->required();
    decideCmd->add_option("--ell", o.ell, "latency bound")->required();
    decideCmd->add_option("--witness", o.witness, "write the periodic witness here");

    auto* minCmd = app.add_subcommand("min-latency", "least integer latency for integer metrics");
    minCmd->add_option("--input", o.input)->required();
    minCmd->add_option("--k", o.k)->required();

    auto* decomposeCmd = app.add_subcommand("decompose", "graph decompositions");
    decomposeCmd->add_option("--input", o.input, "graph JSON")->required();
    decomposeCmd->add_option("--mode", o.mode, "eulerize | even | odd-anchored | claw")->required();
    auto* anchorOpt = decomposeCmd->add_option("--anchor", o.anchor, "anchor vertex for odd-anchored");

    auto* genCmd = app.add_subcommand("gen", "random instance (seed from --seed or PATROL_SEED)");
    genCmd->add_option("--sites", o.sites, "site count");
    genCmd->add_option("--kind", o.kind, "points | integer");
    genCmd->add_option("--dim", o.dim, "point dimension");
    genCmd->add_option("--extent", o.extent, "coordinate range [0, extent)");
    genCmd->add_option("--max-distance", o.maxDistance, "largest integer edge weight");
    auto* seedOpt = genCmd->add_option("--seed", o.seed);

    std::vector<const char*> argv{"patrol"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        return fail(out, err, kExitInputError, e.what());
    }

    try {
        Json result;
        if (*solveCmd)
            result = doSolve(o);
        else if (*evalCmd)
            result = doEvaluate(o, evalTsp->count() > 0, evalK->count() > 0);
        else if (*oracleCmd)
            result = doOracle(o);
        else if (*decideCmd)
            result = doDecide(o);
        else if (*minCmd)
            result = doMinLatency(o);
        else if (*decomposeCmd)
            result = doDecompose(o, anchorOpt->count() > 0);
        else if (*genCmd)
            result = doGenerate(o, seedOpt->count() > 0);
        out << result.dump(2) << '\n';
        return kExitOk;
    } catch (const LimitExceeded& e) {
        return fail(out, err, kExitLimitExceeded, e.what());
    } catch (const InvalidInput& e) {
        return fail(out, err, kExitInputError, e.what());
    } catch (const std::exception& e) {
        return fail(out, err, kExitFailure, e.what());
    }
}

} // namespace patrol::cli
