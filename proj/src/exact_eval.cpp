#include "dcr/exact_eval.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <limits>
#include <numeric>
#include <thread>
#include <vector>

#include "dcr/structure.hpp"
#include "parallel_util.hpp"

namespace dcr {

namespace {

struct DeterministicSplit {
    std::vector<int> free_edges;  // 0 < p < 1
    EdgeStateMask forced;         // p = 1 edges set; p = 0 edges stay clear
    std::size_t forced_up_count = 0;
};

DeterministicSplit split_by_determinism(const NetworkInstance& instance) {
    const int m = instance.graph().edge_count();
    DeterministicSplit split{{}, EdgeStateMask(static_cast<std::size_t>(m)), 0};
    for (int e = 0; e < m; ++e) {
        const ExactProbability& p = instance.probability(e);
        if (p.is_one()) {
            split.forced.set(e);
            ++split.forced_up_count;
        } else if (!p.is_zero()) {
            split.free_edges.push_back(e);
        }
    }
    return split;
}

void check_cap(std::size_t free_count, int cap, const char* operation) {
    if (static_cast<int>(free_count) > cap)
        throw CapExceededError(std::string(operation) + " over " +
                               std::to_string(free_count) +
                               " non-deterministic edges exceeds the cap of " +
                               std::to_string(cap));
}

// Depth-first walk over the low free-edge positions, sharing prefix products.
struct ChunkEnumerator {
    const NetworkInstance& instance;
    const std::vector<int>& free_edges;
    const std::vector<Rational>& up_weight;
    const std::vector<Rational>& down_weight;
    EdgeStateMask mask;
    Rational sum{0};

    void walk(int pos, const Rational& weight) {
        if (pos < 0) {
            if (structure_phi(instance, mask)) sum += weight;
            return;
        }
        const int e = free_edges[pos];
        mask.set(e);
        walk(pos - 1, Rational(weight * up_weight[pos]));
        mask.reset(e);
        walk(pos - 1, Rational(weight * down_weight[pos]));
    }
};

}  // namespace

ExactProbability reliability_enumerate(const NetworkInstance& instance, int cap) {
    const DeterministicSplit split = split_by_determinism(instance);
    const int free_count = static_cast<int>(split.free_edges.size());
    check_cap(free_count, cap, "enumeration");

    std::vector<Rational> up(free_count), down(free_count);
    for (int i = 0; i < free_count; ++i) {
        const Rational& p = instance.probability(split.free_edges[i]).value();
        up[i] = p;
        down[i] = 1 - p;
    }

    // Fixed chunk layout over the high free-edge positions; the thread count
    // only decides who works on which chunk, never what a chunk contains.
    const int high_bits = std::clamp(free_count - 10, 0, 10);
    const int low_count = free_count - high_bits;
    const std::uint64_t chunk_count = std::uint64_t(1) << high_bits;

    std::vector<Rational> partial(chunk_count);
    auto run_chunks = [&](std::uint64_t first, std::uint64_t stride) {
        for (std::uint64_t c = first; c < chunk_count; c += stride) {
            ChunkEnumerator walker{instance, split.free_edges, up, down, split.forced, Rational(0)};
            Rational weight(1);
            for (int b = 0; b < high_bits; ++b) {
                const int pos = low_count + b;
                if ((c >> b) & 1u) {
                    walker.mask.set(split.free_edges[pos]);
                    weight *= up[pos];
                } else {
                    weight *= down[pos];
                }
            }
            walker.walk(low_count - 1, weight);
            partial[c] = std::move(walker.sum);
        }
    };

    const std::uint64_t workers =
        std::min<std::uint64_t>(detail::thread_budget(0), chunk_count);
    if (workers <= 1) {
        run_chunks(0, 1);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::uint64_t t = 0; t < workers; ++t)
            pool.emplace_back(run_chunks, t, workers);
        for (std::thread& t : pool) t.join();
    }

    Rational total(0);
    for (const Rational& part : partial) total += part;
    return ExactProbability(total);
}

namespace {

struct FactoringWalker {
    const NetworkInstance& instance;
    std::vector<Rational> up_prob;
    std::vector<Rational> down_prob;
    EdgeStateMask up;        // edges decided operating
    EdgeStateMask possible;  // decided operating + undecided

    bool undecided(int e) const { return possible.test(e) && !up.test(e); }

    // Undecided edge at one of the endpoints of the worst terminal pair,
    // lowest index first; falls back to the lowest undecided index.
    int branch_edge(const TerminalDistanceScan& scan) const {
        int best = std::numeric_limits<int>::max();
        for (const NodeId v : {scan.worst_u, scan.worst_v})
            for (const Graph::Incidence& inc : instance.graph().incident(v))
                if (undecided(inc.edge)) best = std::min(best, inc.edge);
        if (best != std::numeric_limits<int>::max()) return best;
        const int m = instance.graph().edge_count();
        for (int e = 0; e < m; ++e)
            if (undecided(e)) return e;
        return -1;
    }

    Rational evaluate() {
        const TerminalDistanceScan scan = scan_terminal_distances(instance, possible);
        if (!scan.within_diameter) return Rational(0);
        if (structure_phi(instance, up)) return Rational(1);

        const int e = branch_edge(scan);
        assert(e >= 0);  // phi(possible)=1 and phi(up)=0 leave an undecided edge

        up.set(e);
        Rational value = up_prob[e] * evaluate();
        up.reset(e);
        possible.reset(e);
        value += down_prob[e] * evaluate();
        possible.set(e);
        return value;
    }
};

}  // namespace

ExactProbability reliability_factoring(const NetworkInstance& instance) {
    const int m = instance.graph().edge_count();
    FactoringWalker walker{instance,
                           std::vector<Rational>(m),
                           std::vector<Rational>(m),
                           EdgeStateMask(static_cast<std::size_t>(m)),
                           EdgeStateMask(static_cast<std::size_t>(m))};
    for (int e = 0; e < m; ++e) {
        const Rational& p = instance.probability(e).value();
        walker.up_prob[e] = p;
        walker.down_prob[e] = 1 - p;
        if (instance.probability(e).is_one()) {
            walker.up.set(e);
            walker.possible.set(e);
        } else if (!instance.probability(e).is_zero()) {
            walker.possible.set(e);
        }
    }
    return ExactProbability(walker.evaluate());
}

PathsetCount count_min_pathsets(const NetworkInstance& instance, int cap) {
    const DeterministicSplit split = split_by_determinism(instance);
    const int free_count = static_cast<int>(split.free_edges.size());
    check_cap(free_count, cap, "pathset census");

    EdgeStateMask mask = split.forced;
    PathsetCount result;
    int best = -1;
    const std::uint64_t states = std::uint64_t(1) << free_count;
    for (std::uint64_t bits = 0; bits < states; ++bits) {
        for (int j = 0; j < free_count; ++j)
            mask.assign(split.free_edges[j], (bits >> j) & 1u);
        if (!structure_phi(instance, mask)) continue;
        const int cardinality =
            static_cast<int>(split.forced_up_count) + std::popcount(bits);
        if (best < 0 || cardinality < best) {
            best = cardinality;
            result.count = 1;
        } else if (cardinality == best) {
            ++result.count;
        }
    }
    if (best >= 0) result.min_cardinality = best;
    return result;
}

BigInt count_diameter_bounded_subgraphs(const Graph& graph, int diameter, int cap) {
    if (graph.node_count() < 2)
        throw std::invalid_argument("subgraph census requires at least two nodes");
    std::vector<NodeId> all_nodes(graph.node_count());
    std::iota(all_nodes.begin(), all_nodes.end(), 0);
    std::vector<ExactProbability> half(graph.edge_count(), ExactProbability::half());
    const NetworkInstance instance(graph, std::move(all_nodes), diameter, std::move(half));

    Rational scaled = reliability_enumerate(instance, cap).value();
    scaled *= Rational(BigInt(1) << graph.edge_count());
    if (scaled.get_den() != 1)
        throw std::logic_error("2^m R(1/2) must be an integer");
    return scaled.get_num();
}

}  // namespace dcr
