#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "dcr/instance.hpp"

namespace dcr {

// Largest number of non-deterministic edges the exhaustive routines accept.
inline constexpr int kDefaultEnumerationCap = 30;

// Raised when an operation would have to enumerate more states than its cap
// allows. Callers can fall back to factoring or sampling.
struct CapExceededError : std::runtime_error {
    explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

// Exact reliability by complete state enumeration. Edges with p=1 are fixed
// up and edges with p=0 fixed down first, so the walk covers 2^{m'} states
// where m' counts edges with 0 < p < 1.
ExactProbability reliability_enumerate(const NetworkInstance& instance,
                                       int cap = kDefaultEnumerationCap);

// Exact reliability by recursive conditioning on one edge at a time,
// R = p_e R[e up] + (1-p_e) R[e down], with two prunes: return 0 when even
// all undecided edges up fails phi, 1 when all undecided edges down already
// satisfies it. No cap; agrees with reliability_enumerate wherever both run.
ExactProbability reliability_factoring(const NetworkInstance& instance);

// Census of minimum-cardinality pathsets among the states consistent with the
// deterministic edges (p=1 up, p=0 down). Cardinality counts all operating
// edges, forced ones included.
struct PathsetCount {
    std::optional<int> min_cardinality;  // empty when no pathset exists
    BigInt count{0};
};
PathsetCount count_min_pathsets(const NetworkInstance& instance,
                                int cap = kDefaultEnumerationCap);

// Number of spanning subgraphs of `graph` in which every node pair lies
// within `diameter` hops, computed as 2^m R at uniform p = 1/2 with all
// nodes as terminals. The scaled value is checked to be integral.
BigInt count_diameter_bounded_subgraphs(const Graph& graph, int diameter,
                                        int cap = kDefaultEnumerationCap);

}  // namespace dcr
