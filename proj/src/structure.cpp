#include "dcr/structure.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <vector>

namespace dcr {

namespace {
std::atomic<std::uint64_t> g_phi_evaluations{0};
}

std::uint64_t phi_evaluation_count() {
    return g_phi_evaluations.load(std::memory_order_relaxed);
}

TerminalDistanceScan scan_terminal_distances(const NetworkInstance& instance,
                                             const EdgeStateMask& state) {
    g_phi_evaluations.fetch_add(1, std::memory_order_relaxed);
    const Graph& g = instance.graph();
    if (state.size() != static_cast<std::size_t>(g.edge_count()))
        throw std::invalid_argument("edge-state mask length does not match the edge count");

    const std::vector<NodeId>& terminals = instance.terminals();
    const int bound = instance.diameter();
    const NodeId n = g.node_count();

    TerminalDistanceScan scan{true, terminals[0], terminals[1], -1};
    std::vector<int> dist(n);
    std::vector<NodeId> queue(n);

    for (std::size_t i = 0; i + 1 < terminals.size(); ++i) {
        const NodeId src = terminals[i];
        std::fill(dist.begin(), dist.end(), -1);
        dist[src] = 0;
        int head = 0;
        int tail = 0;
        queue[tail++] = src;
        while (head < tail) {
            const NodeId u = queue[head++];
            if (dist[u] == bound) break;  // FIFO: everything behind is at least as deep
            for (const Graph::Incidence& inc : g.incident(u)) {
                if (!state.test(inc.edge) || dist[inc.neighbor] >= 0) continue;
                dist[inc.neighbor] = dist[u] + 1;
                queue[tail++] = inc.neighbor;
            }
        }
        for (std::size_t j = i + 1; j < terminals.size(); ++j) {
            const int dt = dist[terminals[j]];
            if (dt < 0) {
                scan.within_diameter = false;
                scan.worst_u = src;
                scan.worst_v = terminals[j];
                scan.worst_distance = -1;
                return scan;
            }
            if (dt > scan.worst_distance) {
                scan.worst_distance = dt;
                scan.worst_u = src;
                scan.worst_v = terminals[j];
            }
        }
    }
    return scan;
}

bool structure_phi(const NetworkInstance& instance, const EdgeStateMask& state) {
    return scan_terminal_distances(instance, state).within_diameter;
}

bool is_pathset(StateClass c) {
    return c == StateClass::Minpath || c == StateClass::NonMinimalPathset;
}

bool is_cutset(StateClass c) { return !is_pathset(c); }

std::string to_string(StateClass c) {
    switch (c) {
        case StateClass::Minpath: return "minpath";
        case StateClass::NonMinimalPathset: return "non-minimal pathset";
        case StateClass::Mincut: return "mincut";
        case StateClass::NonMaximalCutset: return "non-maximal cutset";
    }
    return "?";
}

StateClass classify_state(const NetworkInstance& instance, const EdgeStateMask& state) {
    EdgeStateMask work = state;
    const std::size_t m = state.size();
    if (structure_phi(instance, work)) {
        for (std::size_t i = 0; i < m; ++i) {
            if (!work.test(i)) continue;
            work.reset(i);
            const bool still_pathset = structure_phi(instance, work);
            work.set(i);
            if (still_pathset) return StateClass::NonMinimalPathset;
        }
        return StateClass::Minpath;
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (work.test(i)) continue;
        work.set(i);
        const bool now_pathset = structure_phi(instance, work);
        work.reset(i);
        if (!now_pathset) return StateClass::NonMaximalCutset;
    }
    return StateClass::Mincut;
}

}  // namespace dcr
