#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dcr/exact_eval.hpp"
#include "dcr/instance.hpp"

// Gadget constructions that tie diameter-constrained reliability to vertex
// cover counting, plus brute-force cover oracles and verifiers for the exact
// counting identities the gadgets satisfy.

namespace dcr {

// Largest node count the vertex-cover census accepts.
inline constexpr int kDefaultCoverCap = 24;

// Bipartition A u B with every edge between the sides.
struct BipartiteInstance {
    int a_count;
    int b_count;
    std::vector<std::pair<int, int>> edges;  // (index into A, index into B)

    BipartiteInstance(int a_count, int b_count, std::vector<std::pair<int, int>> edges);
};

// Plain graph view: A nodes get ids 0..|A|-1, B nodes follow.
Graph to_graph(const BipartiteInstance& bip);

struct GadgetLabels {
    std::optional<NodeId> source;  // s
    std::optional<NodeId> sink;    // t
    std::optional<NodeId> apex_a;
    std::optional<NodeId> apex_b;
    std::vector<NodeId> path_nodes;  // s, s_1, ..., s_{d-3}
    std::vector<NodeId> a_side;
    std::vector<NodeId> b_side;
    std::vector<int> a_attachment_edges;  // edge {s_{d-3}, a_i}, aligned with a_side
    std::vector<int> b_attachment_edges;  // edge {b_j, t}, aligned with b_side
    std::vector<int> apex_a_edges;        // diameter-2 gadget: edge {x, apex_a} per node x
};

struct GadgetResult {
    NetworkInstance instance;
    GadgetLabels labels;
};

// Two-terminal gadget for d >= 3: a perfect path s..s_{d-3}, the bipartite
// edges kept perfect, and attachment links s_{d-3}-a (a in A) and b-t (b in B)
// failing independently at p = 1/2. Terminals {s, t}. With d = 3 the path
// degenerates to the single node s, attached to A directly.
GadgetResult build_two_terminal_gadget(const BipartiteInstance& bip, int diameter);

// The two-terminal gadget plus a perfect clique on A and one on B, with every
// node a terminal. Same node set, same probabilities otherwise.
GadgetResult build_all_terminal_gadget(const BipartiteInstance& bip, int diameter);

// Apex gadget at d = 2: two new nodes a, b each adjacent to every original
// node; only the edges at a are random (p = 1/2). All nodes are terminals.
// Requires at least one original edge.
GadgetResult build_diameter2_gadget(const Graph& g);

// Brute-force vertex-cover censuses (2^n subsets).
BigInt count_vertex_covers(const Graph& g, int cap = kDefaultCoverCap);
BigInt count_vertex_covers(const BipartiteInstance& bip, int cap = kDefaultCoverCap);

struct MinCoverCount {
    int size;
    BigInt count;
};
MinCoverCount count_min_vertex_covers(const Graph& g, int cap = kDefaultCoverCap);
MinCoverCount count_min_vertex_covers(const BipartiteInstance& bip, int cap = kDefaultCoverCap);

// Checks |covers| = 2^{|A|+|B|} (1 - R) on the two-terminal gadget, where R
// is evaluated exactly at p = 1/2 on the attachment links.
struct VcIdentityReport {
    BigInt cover_count;
    ExactProbability reliability;
    Rational identity_value;  // 2^{|A|+|B|} (1 - R)
    bool integral;
    bool pass;
};
VcIdentityReport verify_vc_identity(const BipartiteInstance& bip, int diameter,
                                    int enumeration_cap = kDefaultEnumerationCap,
                                    int cover_cap = kDefaultCoverCap);

// Checks that the two-terminal gadget and its all-terminal extension have
// exactly the same reliability.
struct EqualityReport {
    ExactProbability two_terminal;
    ExactProbability all_terminal;
    bool pass;
};
EqualityReport verify_all_terminal_equality(const BipartiteInstance& bip, int diameter,
                                            int enumeration_cap = kDefaultEnumerationCap);

// Checks on the diameter-2 gadget that the minimum-cardinality pathsets are
// exactly (perfect edges) + (a minimum vertex cover of the source graph):
// same minimum size offset, same count.
struct CoverPathsetReport {
    int perfect_edge_count;
    PathsetCount gadget_pathsets;
    MinCoverCount source_covers;
    bool cardinality_matches;
    bool count_matches;
    bool pass;
    std::string note;
};
CoverPathsetReport verify_cover_pathset_correspondence(
    const Graph& g, int enumeration_cap = kDefaultEnumerationCap,
    int cover_cap = kDefaultCoverCap);

}  // namespace dcr
