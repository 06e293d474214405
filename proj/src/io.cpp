#include "dcr/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace dcr {

ParseError::ParseError(int line_number, const std::string& message)
    : std::runtime_error(line_number > 0
                             ? "line " + std::to_string(line_number) + ": " + message
                             : message),
      line(line_number) {}

namespace {

struct Row {
    int line;
    std::vector<std::string> tokens;
};

std::vector<Row> tokenize(std::istream& in) {
    std::vector<Row> rows;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream stream(raw);
        Row row{line, {}};
        std::string token;
        while (stream >> token) row.tokens.push_back(std::move(token));
        if (!row.tokens.empty()) rows.push_back(std::move(row));
    }
    return rows;
}

bool all_digits(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isdigit(c) != 0;
    });
}

bool integer_like(const std::string& s) {
    if (s.empty()) return false;
    return all_digits(s[0] == '-' ? s.substr(1) : s);
}

long long parse_nonnegative(const Row& row, std::size_t index, const char* what) {
    const std::string& token = row.tokens[index];
    if (!all_digits(token) || token.size() > 18)
        throw ParseError(row.line, std::string(what) + " must be a nonnegative integer, got '" +
                                       token + "'");
    return std::stoll(token);
}

// Node tokens: a plain integer is the id itself; anything else is a name
// assigned the next id in first-appearance order. One file, one style.
struct NodeResolver {
    std::optional<long long> declared;
    std::map<std::string, NodeId> names;
    bool numeric_used = false;
    bool names_used = false;

    NodeId resolve(const std::string& token, int line) {
        if (!declared) throw ParseError(line, "nodes must be declared before use");
        if (integer_like(token)) {
            if (names_used)
                throw ParseError(line, "cannot mix numeric node ids and node names");
            numeric_used = true;
            if (token[0] == '-' || token.size() > 18)
                throw ParseError(line, "node id " + token + " out of range");
            const long long id = std::stoll(token);
            if (id >= *declared)
                throw ParseError(line, "node id " + token + " out of range");
            return static_cast<NodeId>(id);
        }
        if (numeric_used)
            throw ParseError(line, "cannot mix numeric node ids and node names");
        names_used = true;
        if (const auto it = names.find(token); it != names.end()) return it->second;
        const NodeId id = static_cast<NodeId>(names.size());
        if (id >= *declared)
            throw ParseError(line, "node name '" + token + "' exceeds the declared node count");
        names.emplace(token, id);
        return id;
    }
};

struct InstanceBuilder {
    NodeResolver nodes;
    std::vector<Edge> edges;
    std::vector<ExactProbability> probabilities;
    std::set<std::pair<NodeId, NodeId>> seen_edges;
    std::optional<std::vector<NodeId>> terminals;
    bool terminals_all = false;
    int terminals_line = 0;
    std::optional<int> diameter;

    void handle_nodes(const Row& row) {
        if (nodes.declared) throw ParseError(row.line, "duplicate nodes declaration");
        if (row.tokens.size() != 2)
            throw ParseError(row.line, "expected: nodes <count>");
        const long long n = parse_nonnegative(row, 1, "node count");
        if (n > 100'000'000) throw ParseError(row.line, "node count too large");
        nodes.declared = n;
    }

    void handle_edge(const Row& row, bool require_probability) {
        if (!nodes.declared)
            throw ParseError(row.line, "nodes must be declared before edges");
        const bool has_probability = row.tokens.size() == 5 && row.tokens[3] == "p";
        if (!has_probability && (require_probability || row.tokens.size() != 3))
            throw ParseError(row.line, "expected: edge <u> <v> p <num>/<den>");
        const NodeId u = nodes.resolve(row.tokens[1], row.line);
        const NodeId v = nodes.resolve(row.tokens[2], row.line);
        if (u == v) throw ParseError(row.line, "self-loop on node " + row.tokens[1]);
        const auto [lo, hi] = std::minmax(u, v);
        if (!seen_edges.insert({lo, hi}).second)
            throw ParseError(row.line, "duplicate edge " + row.tokens[1] + " " + row.tokens[2]);
        ExactProbability p = ExactProbability::one();
        if (has_probability) {
            try {
                p = parse_probability(row.tokens[4]);
            } catch (const std::invalid_argument& err) {
                throw ParseError(row.line, err.what());
            }
        }
        edges.push_back({u, v});
        probabilities.push_back(std::move(p));
    }

    void handle_terminals(const Row& row) {
        if (terminals || terminals_all)
            throw ParseError(row.line, "duplicate terminals declaration");
        if (row.tokens.size() < 2)
            throw ParseError(row.line, "expected: terminals <id> ... or terminals all");
        terminals_line = row.line;
        if (row.tokens.size() == 2 && row.tokens[1] == "all") {
            terminals_all = true;
            return;
        }
        std::vector<NodeId> list;
        for (std::size_t i = 1; i < row.tokens.size(); ++i)
            list.push_back(nodes.resolve(row.tokens[i], row.line));
        terminals = std::move(list);
    }

    void handle_diameter(const Row& row) {
        if (diameter) throw ParseError(row.line, "duplicate diameter declaration");
        if (row.tokens.size() != 2)
            throw ParseError(row.line, "expected: diameter <d>");
        const long long d = parse_nonnegative(row, 1, "diameter");
        if (d < 1) throw ParseError(row.line, "diameter must be a positive integer");
        if (d > 1'000'000'000) throw ParseError(row.line, "diameter too large");
        diameter = static_cast<int>(d);
    }

    Graph build_graph() {
        if (!nodes.declared) throw ParseError(0, "missing nodes declaration");
        return Graph(static_cast<NodeId>(*nodes.declared), edges);
    }
};

}  // namespace

ExactProbability parse_probability(const std::string& token) {
    if (token.find('.') != std::string::npos)
        throw std::invalid_argument(
            "decimal probabilities are rejected; use an exact rational like 1/2");
    const auto slash = token.find('/');
    const std::string num = token.substr(0, slash);
    if (!all_digits(num))
        throw std::invalid_argument("malformed probability '" + token + "'");
    std::string den = "1";
    if (slash != std::string::npos) {
        den = token.substr(slash + 1);
        if (!all_digits(den))
            throw std::invalid_argument("malformed probability '" + token + "'");
    }
    const BigInt denominator(den);
    if (denominator == 0)
        throw std::invalid_argument("probability denominator must be nonzero");
    return ExactProbability(BigInt(num), denominator);
}

NetworkInstance parse_instance(std::istream& in) {
    InstanceBuilder builder;
    for (const Row& row : tokenize(in)) {
        const std::string& keyword = row.tokens[0];
        if (keyword == "nodes") builder.handle_nodes(row);
        else if (keyword == "edge") builder.handle_edge(row, /*require_probability=*/true);
        else if (keyword == "terminals") builder.handle_terminals(row);
        else if (keyword == "diameter") builder.handle_diameter(row);
        else throw ParseError(row.line, "unknown declaration '" + keyword + "'");
    }
    if (!builder.terminals && !builder.terminals_all)
        throw ParseError(0, "missing terminals declaration");
    if (!builder.diameter) throw ParseError(0, "missing diameter declaration");
    Graph graph = builder.build_graph();

    std::vector<NodeId> terminals;
    if (builder.terminals_all) {
        terminals.resize(graph.node_count());
        std::iota(terminals.begin(), terminals.end(), 0);
    } else {
        terminals = *builder.terminals;
    }
    std::sort(terminals.begin(), terminals.end());
    terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());
    if (terminals.size() < 2)
        throw ParseError(builder.terminals_line, "at least two terminals are required");

    try {
        return NetworkInstance(std::move(graph), std::move(terminals), *builder.diameter,
                               std::move(builder.probabilities));
    } catch (const std::invalid_argument& err) {
        throw ParseError(0, err.what());
    }
}

Graph parse_graph(std::istream& in) {
    InstanceBuilder builder;
    for (const Row& row : tokenize(in)) {
        const std::string& keyword = row.tokens[0];
        if (keyword == "nodes") builder.handle_nodes(row);
        else if (keyword == "edge") builder.handle_edge(row, /*require_probability=*/false);
        else if (keyword == "terminals") builder.handle_terminals(row);
        else if (keyword == "diameter") builder.handle_diameter(row);
        else throw ParseError(row.line, "unknown declaration '" + keyword + "'");
    }
    return builder.build_graph();
}

BipartiteInstance parse_bipartite(std::istream& in) {
    std::optional<long long> a_count;
    std::optional<long long> b_count;
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    for (const Row& row : tokenize(in)) {
        const std::string& keyword = row.tokens[0];
        if (keyword == "a_nodes" || keyword == "b_nodes") {
            auto& slot = keyword == "a_nodes" ? a_count : b_count;
            if (slot) throw ParseError(row.line, "duplicate " + keyword + " declaration");
            if (row.tokens.size() != 2)
                throw ParseError(row.line, "expected: " + keyword + " <count>");
            const long long n = parse_nonnegative(row, 1, keyword.c_str());
            if (n < 1) throw ParseError(row.line, keyword + " must be at least 1");
            if (n > 1'000'000) throw ParseError(row.line, keyword + " too large");
            slot = n;
        } else if (keyword == "edge") {
            if (!a_count || !b_count)
                throw ParseError(row.line, "a_nodes and b_nodes must be declared before edges");
            if (row.tokens.size() != 3)
                throw ParseError(row.line, "expected: edge <a-index> <b-index>");
            const long long a = parse_nonnegative(row, 1, "a-index");
            const long long b = parse_nonnegative(row, 2, "b-index");
            if (a >= *a_count) throw ParseError(row.line, "a-index out of range");
            if (b >= *b_count) throw ParseError(row.line, "b-index out of range");
            if (!seen.insert({static_cast<int>(a), static_cast<int>(b)}).second)
                throw ParseError(row.line, "duplicate bipartite edge");
            edges.push_back({static_cast<int>(a), static_cast<int>(b)});
        } else {
            throw ParseError(row.line, "unknown declaration '" + keyword + "'");
        }
    }
    if (!a_count) throw ParseError(0, "missing a_nodes declaration");
    if (!b_count) throw ParseError(0, "missing b_nodes declaration");
    return BipartiteInstance(static_cast<int>(*a_count), static_cast<int>(*b_count),
                             std::move(edges));
}

namespace {

NetworkInstance parse_instance_text(const std::string& text) {
    std::istringstream in(text);
    return parse_instance(in);
}

template <typename T, typename Parser>
T load_from_file(const std::string& path, Parser parse) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return parse(in);
}

std::string join_ids(const std::vector<NodeId>& ids) {
    std::string out;
    for (NodeId id : ids) {
        if (!out.empty()) out += ' ';
        out += std::to_string(id);
    }
    return out;
}

}  // namespace

NetworkInstance parse_instance(const std::string& text) { return parse_instance_text(text); }

NetworkInstance load_instance(const std::string& path) {
    return load_from_file<NetworkInstance>(
        path, [](std::istream& in) { return parse_instance(in); });
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

Graph load_graph(const std::string& path) {
    return load_from_file<Graph>(path, [](std::istream& in) { return parse_graph(in); });
}

BipartiteInstance parse_bipartite(const std::string& text) {
    std::istringstream in(text);
    return parse_bipartite(in);
}

BipartiteInstance load_bipartite(const std::string& path) {
    return load_from_file<BipartiteInstance>(
        path, [](std::istream& in) { return parse_bipartite(in); });
}

void write_instance(std::ostream& out, const NetworkInstance& instance,
                    const GadgetLabels* labels) {
    if (labels) {
        if (labels->source) out << "# role s: node " << *labels->source << "\n";
        if (labels->path_nodes.size() > 1)
            out << "# role path: nodes " << join_ids(labels->path_nodes) << "\n";
        if (!labels->a_side.empty())
            out << "# role A: nodes " << join_ids(labels->a_side) << "\n";
        if (!labels->b_side.empty())
            out << "# role B: nodes " << join_ids(labels->b_side) << "\n";
        if (labels->sink) out << "# role t: node " << *labels->sink << "\n";
        if (labels->apex_a) out << "# role apex-a: node " << *labels->apex_a << "\n";
        if (labels->apex_b) out << "# role apex-b: node " << *labels->apex_b << "\n";
    }
    out << "nodes " << instance.graph().node_count() << "\n";
    for (int e = 0; e < instance.graph().edge_count(); ++e) {
        const Edge& edge = instance.graph().edge(e);
        out << "edge " << edge.u << " " << edge.v << " p "
            << instance.probability(e).to_fraction() << "\n";
    }
    if (instance.is_all_terminal()) {
        out << "terminals all\n";
    } else {
        out << "terminals " << join_ids(instance.terminals()) << "\n";
    }
    out << "diameter " << instance.diameter() << "\n";
}

std::string to_instance_text(const NetworkInstance& instance, const GadgetLabels* labels) {
    std::ostringstream out;
    write_instance(out, instance, labels);
    return out.str();
}

}  // namespace dcr
