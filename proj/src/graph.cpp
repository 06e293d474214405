#include "dcr/graph.hpp"

#include <bit>
#include <stdexcept>

namespace dcr {

Graph::Graph(NodeId node_count, std::vector<Edge> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
    if (node_count_ < 0) throw std::invalid_argument("node count must be nonnegative");
    adjacency_.resize(node_count_);
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
        Edge& e = edges_[i];
        if (e.u == e.v)
            throw std::invalid_argument("self-loop on node " + std::to_string(e.u));
        if (e.u < 0 || e.v < 0 || e.u >= node_count_ || e.v >= node_count_)
            throw std::invalid_argument("edge {" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + "} endpoint out of range");
        if (e.u > e.v) std::swap(e.u, e.v);
        if (!index_by_endpoints_.emplace(std::pair{e.u, e.v}, i).second)
            throw std::invalid_argument("duplicate edge {" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + "}");
        adjacency_[e.u].push_back({e.v, i});
        adjacency_[e.v].push_back({e.u, i});
    }
}

std::optional<int> Graph::edge_index(NodeId u, NodeId v) const {
    if (u > v) std::swap(u, v);
    auto it = index_by_endpoints_.find({u, v});
    if (it == index_by_endpoints_.end()) return std::nullopt;
    return it->second;
}

EdgeStateMask::EdgeStateMask(std::size_t bit_count, bool all_set)
    : bit_count_(bit_count), words_((bit_count + 63) / 64, 0) {
    if (all_set) {
        for (std::size_t i = 0; i < bit_count_; ++i) set(i);
    }
}

EdgeStateMask EdgeStateMask::from_bits(std::uint64_t bits, std::size_t bit_count) {
    if (bit_count > 64)
        throw std::invalid_argument("from_bits supports at most 64 edges");
    EdgeStateMask mask(bit_count);
    if (bit_count > 0) {
        const std::uint64_t keep =
            bit_count == 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << bit_count) - 1);
        mask.words_[0] = bits & keep;
    }
    return mask;
}

std::size_t EdgeStateMask::count() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
}

bool EdgeStateMask::none() const {
    for (std::uint64_t w : words_)
        if (w) return false;
    return true;
}

bool EdgeStateMask::is_subset_of(const EdgeStateMask& other) const {
    if (bit_count_ != other.bit_count_)
        throw std::invalid_argument("mask lengths differ");
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i]) return false;
    return true;
}

std::string EdgeStateMask::to_string() const {
    std::string s(bit_count_, '0');
    for (std::size_t i = 0; i < bit_count_; ++i)
        if (test(i)) s[i] = '1';
    return s;
}

}  // namespace dcr
