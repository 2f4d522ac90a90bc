#include "patrol/decider.hpp"

#include "patrol/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

namespace patrol {

namespace {

enum class Color : std::uint8_t { White, Grey, Black };

// Dense state numbering: sorted robot positions in base totalCount, then the
// per-site counters in base ell (counters always stay below ell).
class StateCodec {
public:
    StateCodec(int nodes, int robots, int sites, int ell) : nodes_(nodes), robots_(robots), sites_(sites), ell_(ell) {
        positionSpace_ = 1;
        for (int i = 0; i < robots; ++i)
            positionSpace_ *= static_cast<std::uint64_t>(nodes);
        counterSpace_ = 1;
        for (int i = 0; i < sites; ++i)
            counterSpace_ *= static_cast<std::uint64_t>(ell);
    }

    std::uint64_t size() const { return positionSpace_ * counterSpace_; }

    std::uint64_t encode(const std::vector<int>& sortedPositions, const std::vector<int>& counters) const {
        std::uint64_t p = 0;
        for (int i = robots_ - 1; i >= 0; --i)
            p = p * nodes_ + sortedPositions[i];
        std::uint64_t c = 0;
        for (int i = sites_ - 1; i >= 0; --i)
            c = c * ell_ + counters[i];
        return p * counterSpace_ + c;
    }

    Configuration decode(std::uint64_t code) const {
        Configuration cfg;
        std::uint64_t c = code % counterSpace_;
        std::uint64_t p = code / counterSpace_;
        cfg.positions.resize(robots_);
        for (int i = 0; i < robots_; ++i) {
            cfg.positions[i] = static_cast<int>(p % nodes_);
            p /= nodes_;
        }
        cfg.sinceVisit.resize(sites_);
        for (int i = 0; i < sites_; ++i) {
            cfg.sinceVisit[i] = static_cast<int>(c % ell_);
            c /= ell_;
        }
        return cfg;
    }

private:
    int nodes_, robots_, sites_, ell_;
    std::uint64_t positionSpace_ = 1, counterSpace_ = 1;
};

struct Frame {
    std::uint64_t code;
    Configuration cfg;
    std::uint64_t nextMove = 0;
};

class Search {
public:
    Search(const UnitGraph& graph, int k, int ell)
        : graph_(graph), k_(k), ell_(ell), codec_(graph.totalCount, k, graph.originalCount, ell),
          color_(codec_.size(), Color::White) {}

    Decision run() {
        Decision out;
        std::vector<int> placement(k_, 0);
        // Start placements: nondecreasing k-tuples of original sites.
        auto place = [&](auto&& self, int robot, int from) -> bool {
            if (robot == k_) {
                const std::vector<int> zero(graph_.originalCount, 0);
                return explore(codec_.encode(placement, zero), out);
            }
            for (int s = from; s < graph_.originalCount; ++s) {
                placement[robot] = s;
                if (self(self, robot + 1, s))
                    return true;
            }
            return false;
        };
        place(place, 0, 0);
        out.statesVisited = visited_;
        return out;
    }

private:
    std::uint64_t moveCount(const Configuration& cfg) const {
        std::uint64_t count = 1;
        for (int p : cfg.positions)
            count *= graph_.adjacency[p].size() + 1;
        return count;
    }

    // Successor number `move` (mixed radix over robots; digit 0 = stay).
    // Returns false when some site's counter would reach ell.
    bool successor(const Configuration& cfg, std::uint64_t move, std::uint64_t& code) const {
        std::vector<int> next(k_);
        for (int r = 0; r < k_; ++r) {
            const auto& nbrs = graph_.adjacency[cfg.positions[r]];
            const std::uint64_t radix = nbrs.size() + 1;
            const std::uint64_t digit = move % radix;
            move /= radix;
            next[r] = digit == 0 ? cfg.positions[r] : nbrs[digit - 1];
        }
        std::sort(next.begin(), next.end());
        std::vector<int> counters(graph_.originalCount);
        for (int s = 0; s < graph_.originalCount; ++s) {
            if (std::binary_search(next.begin(), next.end(), s)) {
                counters[s] = 0;
            } else {
                counters[s] = cfg.sinceVisit[s] + 1;
                if (counters[s] >= ell_)
                    return false;
            }
        }
        code = codec_.encode(next, counters);
        return true;
    }

    bool explore(std::uint64_t root, Decision& out) {
        if (color_[root] != Color::White)
            return false;
        std::vector<Frame> stack;
        std::unordered_map<std::uint64_t, std::size_t> depthOf;
        auto push = [&](std::uint64_t code) {
            color_[code] = Color::Grey;
            ++visited_;
            depthOf[code] = stack.size();
            stack.push_back({code, codec_.decode(code), 0});
        };
        push(root);
        while (!stack.empty()) {
            Frame& top = stack.back();
            const std::uint64_t moves = moveCount(top.cfg);
            bool descended = false;
            while (top.nextMove < moves) {
                std::uint64_t code = 0;
                if (!successor(top.cfg, top.nextMove++, code))
                    continue;
                if (color_[code] == Color::Grey) {
                    out.answer = true;
                    out.witness = witnessFrom(stack, depthOf.at(code));
                    return true;
                }
                if (color_[code] == Color::White) {
                    push(code);
                    descended = true;
                    break;
                }
            }
            if (!descended) {
                color_[top.code] = Color::Black;
                depthOf.erase(top.code);
                stack.pop_back();
            }
        }
        return false;
    }

    PeriodicWitness witnessFrom(const std::vector<Frame>& stack, std::size_t cycleStart) const {
        PeriodicWitness w;
        for (std::size_t i = 0; i < stack.size(); ++i)
            (i < cycleStart ? w.prefix : w.cycle).push_back(stack[i].cfg);
        // Carry robot identities forward so each robot's own moves are unit steps.
        Configuration* previous = nullptr;
        for (auto* seq : {&w.prefix, &w.cycle}) {
            for (auto& cfg : *seq) {
                if (previous)
                    cfg.positions = alignTo(previous->positions, cfg.positions);
                previous = &cfg;
            }
        }
        return w;
    }

    std::vector<int> alignTo(const std::vector<int>& from, std::vector<int> to) const {
        std::sort(to.begin(), to.end());
        do {
            bool ok = true;
            for (int r = 0; r < k_ && ok; ++r)
                ok = from[r] == to[r] || std::binary_search(graph_.adjacency[from[r]].begin(),
                                                            graph_.adjacency[from[r]].end(), to[r]);
            if (ok)
                return to;
        } while (std::next_permutation(to.begin(), to.end()));
        return to;
    }

    const UnitGraph& graph_;
    int k_, ell_;
    StateCodec codec_;
    std::vector<Color> color_;
    std::uint64_t visited_ = 0;
};

Decision parking(const MetricSpace& space, int k) {
    Configuration cfg;
    for (int r = 0; r < k; ++r)
        cfg.positions.push_back(r < space.size() ? r : 0);
    cfg.sinceVisit.assign(space.size(), 0);
    Decision d;
    d.answer = true;
    d.witness = PeriodicWitness{{}, {cfg}};
    d.statesVisited = 1;
    return d;
}

void checkIntegerSpace(const MetricSpace& space) {
    if (!space.isInteger())
        throw InvalidInput("the exact decider needs integer distances");
}

} // namespace

bool isLegalStep(const UnitGraph& graph, const std::vector<int>& from, const std::vector<int>& to) {
    if (from.size() != to.size())
        return false;
    std::vector<int> perm(to.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (std::size_t r = 0; r < from.size() && ok; ++r) {
            const int a = from[r], b = to[perm[r]];
            ok = a == b || std::binary_search(graph.adjacency[a].begin(), graph.adjacency[a].end(), b);
        }
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

Decision decide(const MetricSpace& space, int k, int ell) {
    if (k < 1)
        throw InvalidInput("k must be ≥ 1");
    if (ell < 1)
        throw InvalidInput("ell must be >= 1");
    checkIntegerSpace(space);
    if (k >= space.size())
        return parking(space, k);

    const UnitGraph graph = subdivideInteger(space);
    const double bound = std::pow(static_cast<double>(graph.totalCount), k) * std::pow(ell + 1.0, space.size());
    if (bound > kDeciderStateLimit)
        throw LimitExceeded("decider state space " + std::to_string(static_cast<long long>(bound)) +
                            " exceeds the limit of " + std::to_string(static_cast<long long>(kDeciderStateLimit)));
    return Search(graph, k, ell).run();
}

int minimalLatency(const MetricSpace& space, int k) {
    if (k < 1)
        throw InvalidInput("k must be ≥ 1");
    checkIntegerSpace(space);
    if (k >= space.size())
        return 0;
    // One robot circling any tour keeps every gap within the tour length, so
    // the scan terminates.
    for (int ell = 1;; ++ell)
        if (decide(space, k, ell).answer)
            return ell;
}

} // namespace patrol
