#pragma once

#include <vector>

#include "dcr/graph.hpp"
#include "dcr/rational.hpp"

namespace dcr {

// A graph together with a terminal set K (|K| >= 2), a hop bound d >= 1 and
// one exact operation probability per edge. Immutable after construction.
class NetworkInstance {
public:
    NetworkInstance(Graph graph, std::vector<NodeId> terminals, int diameter,
                    std::vector<ExactProbability> probabilities);

    const Graph& graph() const { return graph_; }
    const std::vector<NodeId>& terminals() const { return terminals_; }  // sorted, unique
    int terminal_count() const { return static_cast<int>(terminals_.size()); }
    bool is_all_terminal() const { return terminal_count() == graph_.node_count(); }
    int diameter() const { return diameter_; }
    const std::vector<ExactProbability>& probabilities() const { return probabilities_; }
    const ExactProbability& probability(int edge) const { return probabilities_[edge]; }

    // Number of edges with 0 < p < 1.
    int nondeterministic_edge_count() const;

    NetworkInstance with_probability(int edge, ExactProbability p) const;
    NetworkInstance with_terminals(std::vector<NodeId> terminals) const;
    NetworkInstance with_diameter(int diameter) const;

private:
    Graph graph_;
    std::vector<NodeId> terminals_;
    int diameter_;
    std::vector<ExactProbability> probabilities_;
};

}  // namespace dcr
