#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "dcr/instance.hpp"
#include "dcr/reductions.hpp"

namespace dcr {

struct ParseError : std::runtime_error {
    int line;  // 1-based; 0 when the problem is not tied to a single line
    ParseError(int line, const std::string& message);
};

// "num/den" or a bare integer; decimal literals are rejected.
ExactProbability parse_probability(const std::string& token);

// Instance files: one declaration per line, '#' starts a comment.
//   nodes <n>
//   edge <u> <v> p <num>/<den>     (order of edge lines fixes edge indices)
//   terminals <id> <id> ... | terminals all
//   diameter <d>
// Nodes are 0-based integers, or names mapped to ids in first-appearance
// order; the two styles cannot be mixed in one file.
NetworkInstance parse_instance(std::istream& in);
NetworkInstance parse_instance(const std::string& text);
NetworkInstance load_instance(const std::string& path);

// Same grammar, but only the graph is read: the probability clause is
// optional and ignored, as are terminals/diameter lines.
Graph parse_graph(std::istream& in);
Graph parse_graph(const std::string& text);
Graph load_graph(const std::string& path);

// Bipartite files: a_nodes <n>, b_nodes <n>, edge <a-index> <b-index>.
BipartiteInstance parse_bipartite(std::istream& in);
BipartiteInstance parse_bipartite(const std::string& text);
BipartiteInstance load_bipartite(const std::string& path);

// Instance serialization, with gadget role labels emitted as comments.
void write_instance(std::ostream& out, const NetworkInstance& instance,
                    const GadgetLabels* labels = nullptr);
std::string to_instance_text(const NetworkInstance& instance,
                             const GadgetLabels* labels = nullptr);

}  // namespace dcr
