#include "dcr/reductions.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

namespace dcr {

BipartiteInstance::BipartiteInstance(int a_count_, int b_count_,
                                     std::vector<std::pair<int, int>> edges_)
    : a_count(a_count_), b_count(b_count_), edges(std::move(edges_)) {
    if (a_count < 1 || b_count < 1)
        throw std::invalid_argument("both sides of the bipartition must be nonempty");
    std::set<std::pair<int, int>> seen;
    for (const auto& [a, b] : edges) {
        if (a < 0 || a >= a_count || b < 0 || b >= b_count)
            throw std::invalid_argument("bipartite edge endpoint out of range");
        if (!seen.insert({a, b}).second)
            throw std::invalid_argument("duplicate bipartite edge");
    }
}

Graph to_graph(const BipartiteInstance& bip) {
    std::vector<Edge> edges;
    edges.reserve(bip.edges.size());
    for (const auto& [a, b] : bip.edges)
        edges.push_back({a, bip.a_count + b});
    return Graph(bip.a_count + bip.b_count, std::move(edges));
}

namespace {

struct GadgetParts {
    NodeId node_count;
    std::vector<Edge> edges;
    std::vector<ExactProbability> probabilities;
    GadgetLabels labels;
};

// Common core of the two-terminal gadget and its all-terminal extension:
// perfect path s..s_{d-3}, perfect copies of the bipartite edges, and the
// random attachment links at p = 1/2.
GadgetParts two_terminal_parts(const BipartiteInstance& bip, int diameter) {
    if (diameter < 3)
        throw std::invalid_argument("the reduction gadget requires diameter >= 3");
    const int path_length = diameter - 3;  // edges on the path; 0 collapses it to s
    const NodeId a_base = path_length + 1;
    const NodeId b_base = a_base + bip.a_count;
    const NodeId sink = b_base + bip.b_count;

    GadgetParts parts;
    parts.node_count = sink + 1;
    parts.labels.source = 0;
    parts.labels.sink = sink;
    for (NodeId i = 0; i <= path_length; ++i) parts.labels.path_nodes.push_back(i);
    for (int a = 0; a < bip.a_count; ++a) parts.labels.a_side.push_back(a_base + a);
    for (int b = 0; b < bip.b_count; ++b) parts.labels.b_side.push_back(b_base + b);

    const ExactProbability one = ExactProbability::one();
    const ExactProbability half = ExactProbability::half();
    for (NodeId i = 0; i < path_length; ++i) {
        parts.edges.push_back({i, i + 1});
        parts.probabilities.push_back(one);
    }
    for (const auto& [a, b] : bip.edges) {
        parts.edges.push_back({a_base + a, b_base + b});
        parts.probabilities.push_back(one);
    }
    const NodeId path_end = path_length;  // s_{d-3}, or s itself when d = 3
    for (int a = 0; a < bip.a_count; ++a) {
        parts.labels.a_attachment_edges.push_back(static_cast<int>(parts.edges.size()));
        parts.edges.push_back({path_end, a_base + a});
        parts.probabilities.push_back(half);
    }
    for (int b = 0; b < bip.b_count; ++b) {
        parts.labels.b_attachment_edges.push_back(static_cast<int>(parts.edges.size()));
        parts.edges.push_back({b_base + b, sink});
        parts.probabilities.push_back(half);
    }
    return parts;
}

}  // namespace

GadgetResult build_two_terminal_gadget(const BipartiteInstance& bip, int diameter) {
    GadgetParts parts = two_terminal_parts(bip, diameter);
    NetworkInstance instance(Graph(parts.node_count, std::move(parts.edges)),
                             {*parts.labels.source, *parts.labels.sink}, diameter,
                             std::move(parts.probabilities));
    return {std::move(instance), std::move(parts.labels)};
}

GadgetResult build_all_terminal_gadget(const BipartiteInstance& bip, int diameter) {
    GadgetParts parts = two_terminal_parts(bip, diameter);
    const ExactProbability one = ExactProbability::one();
    for (std::size_t i = 0; i < parts.labels.a_side.size(); ++i)
        for (std::size_t j = i + 1; j < parts.labels.a_side.size(); ++j) {
            parts.edges.push_back({parts.labels.a_side[i], parts.labels.a_side[j]});
            parts.probabilities.push_back(one);
        }
    for (std::size_t i = 0; i < parts.labels.b_side.size(); ++i)
        for (std::size_t j = i + 1; j < parts.labels.b_side.size(); ++j) {
            parts.edges.push_back({parts.labels.b_side[i], parts.labels.b_side[j]});
            parts.probabilities.push_back(one);
        }
    std::vector<NodeId> all_nodes(parts.node_count);
    std::iota(all_nodes.begin(), all_nodes.end(), 0);
    NetworkInstance instance(Graph(parts.node_count, std::move(parts.edges)),
                             std::move(all_nodes), diameter,
                             std::move(parts.probabilities));
    return {std::move(instance), std::move(parts.labels)};
}

GadgetResult build_diameter2_gadget(const Graph& g) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("the diameter-2 gadget requires at least one edge");
    const NodeId n = g.node_count();
    const NodeId apex_a = n;
    const NodeId apex_b = n + 1;

    GadgetLabels labels;
    labels.apex_a = apex_a;
    labels.apex_b = apex_b;

    std::vector<Edge> edges = g.edges();
    std::vector<ExactProbability> probabilities(edges.size(), ExactProbability::one());
    for (NodeId x = 0; x < n; ++x) {
        edges.push_back({x, apex_b});
        probabilities.push_back(ExactProbability::one());
    }
    for (NodeId x = 0; x < n; ++x) {
        labels.apex_a_edges.push_back(static_cast<int>(edges.size()));
        edges.push_back({x, apex_a});
        probabilities.push_back(ExactProbability::half());
    }
    std::vector<NodeId> all_nodes(n + 2);
    std::iota(all_nodes.begin(), all_nodes.end(), 0);
    NetworkInstance instance(Graph(n + 2, std::move(edges)), std::move(all_nodes), 2,
                             std::move(probabilities));
    return {std::move(instance), std::move(labels)};
}

namespace {

void check_cover_cap(int n, int cap) {
    if (n > cap)
        throw CapExceededError("vertex-cover census over " + std::to_string(n) +
                               " nodes exceeds the cap of " + std::to_string(cap));
}

std::vector<std::uint64_t> edge_bitmasks(const Graph& g) {
    std::vector<std::uint64_t> masks;
    masks.reserve(g.edge_count());
    for (const Edge& e : g.edges())
        masks.push_back((std::uint64_t(1) << e.u) | (std::uint64_t(1) << e.v));
    return masks;
}

bool covers_all(std::uint64_t subset, const std::vector<std::uint64_t>& edges) {
    for (std::uint64_t e : edges)
        if (!(subset & e)) return false;
    return true;
}

}  // namespace

BigInt count_vertex_covers(const Graph& g, int cap) {
    check_cover_cap(g.node_count(), cap);
    const std::vector<std::uint64_t> edges = edge_bitmasks(g);
    BigInt covers = 0;
    const std::uint64_t subsets = std::uint64_t(1) << g.node_count();
    for (std::uint64_t subset = 0; subset < subsets; ++subset)
        if (covers_all(subset, edges)) ++covers;
    return covers;
}

BigInt count_vertex_covers(const BipartiteInstance& bip, int cap) {
    return count_vertex_covers(to_graph(bip), cap);
}

MinCoverCount count_min_vertex_covers(const Graph& g, int cap) {
    check_cover_cap(g.node_count(), cap);
    const std::vector<std::uint64_t> edges = edge_bitmasks(g);
    MinCoverCount best{g.node_count() + 1, 0};
    const std::uint64_t subsets = std::uint64_t(1) << g.node_count();
    for (std::uint64_t subset = 0; subset < subsets; ++subset) {
        if (!covers_all(subset, edges)) continue;
        const int size = std::popcount(subset);
        if (size < best.size) {
            best.size = size;
            best.count = 1;
        } else if (size == best.size) {
            ++best.count;
        }
    }
    return best;  // the full node set always covers, so best.size <= n
}

MinCoverCount count_min_vertex_covers(const BipartiteInstance& bip, int cap) {
    return count_min_vertex_covers(to_graph(bip), cap);
}

VcIdentityReport verify_vc_identity(const BipartiteInstance& bip, int diameter,
                                    int enumeration_cap, int cover_cap) {
    const GadgetResult gadget = build_two_terminal_gadget(bip, diameter);
    VcIdentityReport report;
    report.reliability = reliability_enumerate(gadget.instance, enumeration_cap);
    report.cover_count = count_vertex_covers(bip, cover_cap);
    report.identity_value =
        Rational(1 - report.reliability.value()) *
        Rational(BigInt(1) << (bip.a_count + bip.b_count));
    report.identity_value.canonicalize();
    report.integral = report.identity_value.get_den() == 1;
    report.pass = report.integral && report.identity_value.get_num() == report.cover_count;
    return report;
}

EqualityReport verify_all_terminal_equality(const BipartiteInstance& bip, int diameter,
                                            int enumeration_cap) {
    const GadgetResult two_terminal = build_two_terminal_gadget(bip, diameter);
    const GadgetResult all_terminal = build_all_terminal_gadget(bip, diameter);
    EqualityReport report;
    report.two_terminal = reliability_enumerate(two_terminal.instance, enumeration_cap);
    report.all_terminal = reliability_enumerate(all_terminal.instance, enumeration_cap);
    report.pass = report.two_terminal == report.all_terminal;
    return report;
}

CoverPathsetReport verify_cover_pathset_correspondence(const Graph& g,
                                                       int enumeration_cap,
                                                       int cover_cap) {
    const GadgetResult gadget = build_diameter2_gadget(g);
    CoverPathsetReport report;
    report.perfect_edge_count = gadget.instance.graph().edge_count() - g.node_count();
    report.gadget_pathsets = count_min_pathsets(gadget.instance, enumeration_cap);
    report.source_covers = count_min_vertex_covers(g, cover_cap);
    report.cardinality_matches =
        report.gadget_pathsets.min_cardinality.has_value() &&
        *report.gadget_pathsets.min_cardinality ==
            report.perfect_edge_count + report.source_covers.size;
    report.count_matches = report.gadget_pathsets.count == report.source_covers.count;
    report.pass = report.cardinality_matches && report.count_matches;
    report.note =
        "pathset census taken over states with every perfect link operating; "
        "counts are matched against minimum-cardinality vertex covers of the "
        "source graph, not covers of the gadget itself";
    return report;
}

}  // namespace dcr
