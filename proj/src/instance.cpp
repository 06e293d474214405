#include "dcr/instance.hpp"

#include <algorithm>
#include <stdexcept>

namespace dcr {

NetworkInstance::NetworkInstance(Graph graph, std::vector<NodeId> terminals, int diameter,
                                 std::vector<ExactProbability> probabilities)
    : graph_(std::move(graph)),
      terminals_(std::move(terminals)),
      diameter_(diameter),
      probabilities_(std::move(probabilities)) {
    std::sort(terminals_.begin(), terminals_.end());
    terminals_.erase(std::unique(terminals_.begin(), terminals_.end()), terminals_.end());
    if (terminals_.size() < 2)
        throw std::invalid_argument("at least two terminals are required");
    for (NodeId t : terminals_)
        if (t < 0 || t >= graph_.node_count())
            throw std::invalid_argument("terminal " + std::to_string(t) + " out of range");
    if (diameter_ < 1) throw std::invalid_argument("diameter must be at least 1");
    if (probabilities_.size() != static_cast<std::size_t>(graph_.edge_count()))
        throw std::invalid_argument("expected one probability per edge");
}

int NetworkInstance::nondeterministic_edge_count() const {
    int count = 0;
    for (const ExactProbability& p : probabilities_)
        if (!p.is_zero() && !p.is_one()) ++count;
    return count;
}

NetworkInstance NetworkInstance::with_probability(int edge, ExactProbability p) const {
    if (edge < 0 || edge >= graph_.edge_count())
        throw std::invalid_argument("edge index out of range");
    std::vector<ExactProbability> probs = probabilities_;
    probs[edge] = std::move(p);
    return NetworkInstance(graph_, terminals_, diameter_, std::move(probs));
}

NetworkInstance NetworkInstance::with_terminals(std::vector<NodeId> terminals) const {
    return NetworkInstance(graph_, std::move(terminals), diameter_, probabilities_);
}

NetworkInstance NetworkInstance::with_diameter(int diameter) const {
    return NetworkInstance(graph_, terminals_, diameter, probabilities_);
}

}  // namespace dcr
