#include "dcr/closed_form.hpp"

#include <stdexcept>

namespace dcr {

namespace {
// p(uv), with the convention p(uv) = 0 when {u,v} is not an edge.
const Rational& probability_or_zero(const NetworkInstance& instance, NodeId u, NodeId v,
                                    const Rational& zero) {
    const std::optional<int> idx = instance.graph().edge_index(u, v);
    return idx ? instance.probability(*idx).value() : zero;
}
}  // namespace

ExactProbability reliability_d1(const NetworkInstance& instance) {
    if (instance.diameter() != 1)
        throw std::invalid_argument("reliability_d1 requires diameter 1");
    const Rational zero(0);
    const std::vector<NodeId>& terminals = instance.terminals();
    Rational product(1);
    for (std::size_t i = 0; i < terminals.size(); ++i) {
        for (std::size_t j = i + 1; j < terminals.size(); ++j) {
            const Rational& p = probability_or_zero(instance, terminals[i], terminals[j], zero);
            if (sgn(p) == 0) return ExactProbability::zero();
            product *= p;
        }
    }
    return ExactProbability(product);
}

ExactProbability reliability_k2_d2(const NetworkInstance& instance) {
    if (instance.terminal_count() != 2 || instance.diameter() != 2)
        throw std::invalid_argument("reliability_k2_d2 requires two terminals and diameter 2");
    const Rational zero(0);
    const NodeId u = instance.terminals()[0];
    const NodeId v = instance.terminals()[1];

    Rational miss = 1 - probability_or_zero(instance, u, v, zero);
    for (NodeId w = 0; w < instance.graph().node_count(); ++w) {
        if (w == u || w == v) continue;
        const Rational& uw = probability_or_zero(instance, u, w, zero);
        const Rational& wv = probability_or_zero(instance, w, v, zero);
        miss *= 1 - uw * wv;
    }
    return ExactProbability(Rational(1 - miss));
}

}  // namespace dcr
