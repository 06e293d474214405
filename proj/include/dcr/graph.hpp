#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dcr {

using NodeId = std::int32_t;

struct Edge {
    NodeId u;
    NodeId v;
};

// Simple undirected graph with a fixed edge order e_0..e_{m-1}.
// Immutable after construction; edge index i never changes, which is what
// gives edge-state masks their meaning.
class Graph {
public:
    Graph(NodeId node_count, std::vector<Edge> edges);

    NodeId node_count() const { return node_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(int index) const { return edges_[index]; }
    const std::vector<Edge>& edges() const { return edges_; }

    struct Incidence {
        NodeId neighbor;
        int edge;
    };
    const std::vector<Incidence>& incident(NodeId v) const { return adjacency_[v]; }

    // Index of the edge {u,v}, if present.
    std::optional<int> edge_index(NodeId u, NodeId v) const;

private:
    NodeId node_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> adjacency_;
    std::map<std::pair<NodeId, NodeId>, int> index_by_endpoints_;
};

// A binary word over the edge set: bit i is 1 iff edge e_i operates.
class EdgeStateMask {
public:
    EdgeStateMask() = default;
    explicit EdgeStateMask(std::size_t bit_count, bool all_set = false);

    // Low bit of `bits` is edge 0. Requires bit_count <= 64.
    static EdgeStateMask from_bits(std::uint64_t bits, std::size_t bit_count);

    std::size_t size() const { return bit_count_; }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    void assign(std::size_t i, bool value) { value ? set(i) : reset(i); }

    std::size_t count() const;
    bool none() const;

    // Bit-wise partial order: true iff every set bit here is set in `other`.
    bool is_subset_of(const EdgeStateMask& other) const;

    std::string to_string() const;  // bit 0 first, e.g. "110"

    bool operator==(const EdgeStateMask& other) const = default;

private:
    std::size_t bit_count_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace dcr
