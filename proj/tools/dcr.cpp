// dcr: evaluate, estimate and cross-check diameter-constrained network
// reliability. Exit codes: 0 success, 1 verification failure, 2 usage or
// input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dcr/closed_form.hpp"
#include "dcr/exact_eval.hpp"
#include "dcr/io.hpp"
#include "dcr/monte_carlo.hpp"
#include "dcr/reductions.hpp"

namespace {

using nlohmann::json;

std::string fraction_with_decimal(const dcr::ExactProbability& p) {
    std::ostringstream out;
    out << p.to_fraction() << " (" << p.to_double() << ")";
    return out.str();
}

std::vector<dcr::NodeId> parse_terminal_list(const std::string& spec) {
    std::vector<dcr::NodeId> ids;
    std::string token;
    std::istringstream in(spec);
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        try {
            ids.push_back(static_cast<dcr::NodeId>(std::stol(token)));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad terminal id '" + token + "'");
        }
    }
    if (ids.empty()) throw std::invalid_argument("empty terminal list");
    return ids;
}

struct EvalOptions {
    std::string input;
    std::string method = "auto";
    int cap = dcr::kDefaultEnumerationCap;
    bool json_output = false;
    std::optional<int> diameter;
    std::optional<std::string> terminals;
};

dcr::NetworkInstance load_with_overrides(const std::string& path,
                                         const std::optional<int>& diameter,
                                         const std::optional<std::string>& terminals) {
    dcr::NetworkInstance instance = dcr::load_instance(path);
    if (diameter) instance = instance.with_diameter(*diameter);
    if (terminals) {
        if (*terminals == "all") {
            std::vector<dcr::NodeId> all(instance.graph().node_count());
            for (dcr::NodeId i = 0; i < instance.graph().node_count(); ++i) all[i] = i;
            instance = instance.with_terminals(std::move(all));
        } else {
            instance = instance.with_terminals(parse_terminal_list(*terminals));
        }
    }
    return instance;
}

int cmd_eval(const EvalOptions& opt) {
    const dcr::NetworkInstance instance =
        load_with_overrides(opt.input, opt.diameter, opt.terminals);

    std::string method = opt.method;
    if (method == "auto") {
        if (instance.diameter() == 1) {
            method = "d1";
        } else if (instance.terminal_count() == 2 && instance.diameter() == 2) {
            method = "k2d2";
        } else if (instance.nondeterministic_edge_count() <= opt.cap) {
            method = "factor";
        } else {
            throw dcr::CapExceededError(
                std::to_string(instance.nondeterministic_edge_count()) +
                " non-deterministic edges exceed the cap of " + std::to_string(opt.cap) +
                "; run the `estimate` command for a sampling estimate, raise --cap, or "
                "force --method factor");
        }
    }

    dcr::ExactProbability reliability;
    if (method == "enumerate") reliability = dcr::reliability_enumerate(instance, opt.cap);
    else if (method == "factor") reliability = dcr::reliability_factoring(instance);
    else if (method == "d1") reliability = dcr::reliability_d1(instance);
    else reliability = dcr::reliability_k2_d2(instance);

    if (opt.json_output) {
        json j;
        j["reliability"] = reliability.to_fraction();
        j["decimal"] = reliability.to_double();
        j["method"] = method;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << fraction_with_decimal(reliability) << "\n";
    }
    return 0;
}

struct EstimateOptions {
    std::string input;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 0;
    bool json_output = false;
    std::optional<int> diameter;
    std::optional<std::string> terminals;
};

int cmd_estimate(const EstimateOptions& opt) {
    const dcr::NetworkInstance instance =
        load_with_overrides(opt.input, opt.diameter, opt.terminals);
    const dcr::EstimateReport report =
        dcr::estimate_reliability(instance, opt.samples, opt.seed);
    if (opt.json_output) {
        std::cout << report.to_json() << "\n";
    } else {
        std::cout << "estimate " << report.point_estimate << "\n"
                  << "ci_low " << report.ci_low << "\n"
                  << "ci_high " << report.ci_high << "\n"
                  << "level " << report.confidence_level << "\n"
                  << "samples " << report.samples << "\n"
                  << "successes " << report.successes << "\n"
                  << "seed " << report.seed << "\n"
                  << "generator " << report.generator << "\n";
    }
    return 0;
}

int emit_gadget(const dcr::GadgetResult& gadget, const std::string& output) {
    if (output.empty()) {
        dcr::write_instance(std::cout, gadget.instance, &gadget.labels);
    } else {
        std::ofstream out(output);
        if (!out) throw std::runtime_error("cannot open output file: " + output);
        dcr::write_instance(out, gadget.instance, &gadget.labels);
    }
    return 0;
}

int cmd_verify_vc_identity(const std::string& input, int diameter, int cap,
                           bool cap_given, bool json_output) {
    const dcr::BipartiteInstance bip = dcr::load_bipartite(input);
    const int cover_cap = cap_given ? cap : dcr::kDefaultCoverCap;
    const dcr::VcIdentityReport report =
        dcr::verify_vc_identity(bip, diameter, cap, cover_cap);
    if (json_output) {
        json j;
        j["covers"] = report.cover_count.get_str();
        j["reliability"] = report.reliability.to_fraction();
        j["identity"] = report.integral ? report.identity_value.get_num().get_str()
                                        : dcr::to_fraction(report.identity_value);
        j["pass"] = report.pass;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "covers=" << report.cover_count << "\n"
                  << "R=" << fraction_with_decimal(report.reliability) << "\n"
                  << "identity=2^" << (bip.a_count + bip.b_count) << "*(1-R)=";
        if (report.integral) std::cout << report.identity_value.get_num();
        else std::cout << dcr::to_fraction(report.identity_value);
        std::cout << "\n" << (report.pass ? "PASS" : "FAIL") << "\n";
    }
    return report.pass ? 0 : 1;
}

int cmd_verify_all_terminal(const std::string& input, int diameter, int cap,
                            bool json_output) {
    const dcr::BipartiteInstance bip = dcr::load_bipartite(input);
    const dcr::EqualityReport report = dcr::verify_all_terminal_equality(bip, diameter, cap);
    if (json_output) {
        json j;
        j["two_terminal"] = report.two_terminal.to_fraction();
        j["all_terminal"] = report.all_terminal.to_fraction();
        j["pass"] = report.pass;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "two_terminal=" << fraction_with_decimal(report.two_terminal) << "\n"
                  << "all_terminal=" << fraction_with_decimal(report.all_terminal) << "\n"
                  << (report.pass ? "PASS" : "FAIL") << "\n";
    }
    return report.pass ? 0 : 1;
}

int cmd_verify_diam2(const std::string& input, int cap, bool cap_given, bool json_output) {
    const dcr::Graph g = dcr::load_graph(input);
    const int cover_cap = cap_given ? cap : dcr::kDefaultCoverCap;
    const dcr::CoverPathsetReport report =
        dcr::verify_cover_pathset_correspondence(g, cap, cover_cap);
    if (json_output) {
        json j;
        j["perfect_edges"] = report.perfect_edge_count;
        if (report.gadget_pathsets.min_cardinality)
            j["min_pathset_cardinality"] = *report.gadget_pathsets.min_cardinality;
        j["min_pathsets"] = report.gadget_pathsets.count.get_str();
        j["min_cover_size"] = report.source_covers.size;
        j["min_covers"] = report.source_covers.count.get_str();
        j["pass"] = report.pass;
        j["note"] = report.note;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "perfect_edges=" << report.perfect_edge_count << "\n";
        if (report.gadget_pathsets.min_cardinality)
            std::cout << "min_pathset_cardinality=" << *report.gadget_pathsets.min_cardinality
                      << "\n";
        std::cout << "min_pathsets=" << report.gadget_pathsets.count << "\n"
                  << "min_cover_size=" << report.source_covers.size << "\n"
                  << "min_covers=" << report.source_covers.count << "\n"
                  << "note: " << report.note << "\n"
                  << (report.pass ? "PASS" : "FAIL") << "\n";
    }
    return report.pass ? 0 : 1;
}

}  // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"diameter-constrained network reliability toolkit"};
    app.require_subcommand(1);

    // eval
    EvalOptions eval;
    CLI::App* eval_cmd = app.add_subcommand("eval", "exact reliability of an instance");
    eval_cmd->add_option("--input", eval.input, "instance file")->required();
    eval_cmd->add_option("--method", eval.method, "evaluation method")
        ->check(CLI::IsMember({"auto", "enumerate", "factor", "d1", "k2d2"}));
    eval_cmd->add_option("--cap", eval.cap, "non-deterministic edge cap");
    eval_cmd->add_flag("--json", eval.json_output, "JSON output");
    eval_cmd->add_option("--diameter", eval.diameter, "override the instance diameter");
    eval_cmd->add_option("--terminals", eval.terminals,
                         "override terminals: comma-separated ids or 'all'");

    // estimate
    EstimateOptions estimate;
    CLI::App* estimate_cmd =
        app.add_subcommand("estimate", "Monte Carlo reliability estimate");
    estimate_cmd->add_option("--input", estimate.input, "instance file")->required();
    estimate_cmd->add_option("--samples", estimate.samples, "number of samples");
    estimate_cmd->add_option("--seed", estimate.seed, "RNG seed");
    estimate_cmd->add_flag("--json", estimate.json_output, "JSON output");
    estimate_cmd->add_option("--diameter", estimate.diameter, "override the diameter");
    estimate_cmd->add_option("--terminals", estimate.terminals,
                             "override terminals: comma-separated ids or 'all'");

    // gadget
    CLI::App* gadget_cmd = app.add_subcommand("gadget", "build a reduction gadget");
    gadget_cmd->require_subcommand(1);
    std::string gadget_input, gadget_output;
    int gadget_diameter = 3;
    CLI::App* gadget_tt = gadget_cmd->add_subcommand(
        "two-terminal", "two-terminal gadget from a bipartite graph");
    gadget_tt->add_option("--input", gadget_input, "bipartite file")->required();
    gadget_tt->add_option("--diameter", gadget_diameter, "gadget diameter (>= 3)")
        ->required();
    gadget_tt->add_option("--output", gadget_output, "output file (default stdout)");
    CLI::App* gadget_at = gadget_cmd->add_subcommand(
        "all-terminal", "all-terminal gadget from a bipartite graph");
    gadget_at->add_option("--input", gadget_input, "bipartite file")->required();
    gadget_at->add_option("--diameter", gadget_diameter, "gadget diameter (>= 3)")
        ->required();
    gadget_at->add_option("--output", gadget_output, "output file (default stdout)");
    CLI::App* gadget_d2 =
        gadget_cmd->add_subcommand("diam2", "apex gadget at diameter 2 from a graph");
    gadget_d2->add_option("--input", gadget_input, "graph file")->required();
    gadget_d2->add_option("--output", gadget_output, "output file (default stdout)");

    // verify
    CLI::App* verify_cmd = app.add_subcommand("verify", "check a counting identity");
    verify_cmd->require_subcommand(1);
    std::string verify_input;
    int verify_diameter = 3;
    int verify_cap = dcr::kDefaultEnumerationCap;
    bool verify_json = false;
    CLI::App* verify_vc = verify_cmd->add_subcommand(
        "vc-identity", "cover count = 2^{|A|+|B|}(1-R) on the two-terminal gadget");
    verify_vc->add_option("--input", verify_input, "bipartite file")->required();
    verify_vc->add_option("--diameter", verify_diameter, "gadget diameter (>= 3)")
        ->required();
    CLI::Option* verify_vc_cap = verify_vc->add_option("--cap", verify_cap, "census cap");
    verify_vc->add_flag("--json", verify_json, "JSON output");
    CLI::App* verify_at = verify_cmd->add_subcommand(
        "all-terminal", "two-terminal and all-terminal gadget reliabilities agree");
    verify_at->add_option("--input", verify_input, "bipartite file")->required();
    verify_at->add_option("--diameter", verify_diameter, "gadget diameter (>= 3)")
        ->required();
    verify_at->add_option("--cap", verify_cap, "census cap");
    verify_at->add_flag("--json", verify_json, "JSON output");
    CLI::App* verify_d2 = verify_cmd->add_subcommand(
        "diam2", "minimum pathsets of the apex gadget match minimum covers");
    verify_d2->add_option("--input", verify_input, "graph file")->required();
    CLI::Option* verify_d2_cap = verify_d2->add_option("--cap", verify_cap, "census cap");
    verify_d2->add_flag("--json", verify_json, "JSON output");

    // count-covers
    std::string covers_input;
    bool covers_minimum = false;
    bool covers_json = false;
    int covers_cap = dcr::kDefaultCoverCap;
    CLI::App* covers_cmd =
        app.add_subcommand("count-covers", "brute-force vertex cover census");
    covers_cmd->add_option("--input", covers_input, "bipartite file")->required();
    covers_cmd->add_flag("--minimum", covers_minimum, "count only minimum-cardinality covers");
    covers_cmd->add_option("--cap", covers_cap, "node cap for the census");
    covers_cmd->add_flag("--json", covers_json, "JSON output");

    // count-subgraphs
    std::string census_input;
    int census_diameter = 2;
    int census_cap = dcr::kDefaultEnumerationCap;
    bool census_json = false;
    CLI::App* census_cmd = app.add_subcommand(
        "count-subgraphs", "count spanning subgraphs with bounded diameter");
    census_cmd->add_option("--input", census_input, "graph file")->required();
    census_cmd->add_option("--diameter", census_diameter, "hop bound")->required();
    census_cmd->add_option("--cap", census_cap, "edge cap for the census");
    census_cmd->add_flag("--json", census_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eval_cmd->parsed()) return cmd_eval(eval);
        if (estimate_cmd->parsed()) return cmd_estimate(estimate);
        if (gadget_cmd->parsed()) {
            if (gadget_tt->parsed())
                return emit_gadget(dcr::build_two_terminal_gadget(
                                       dcr::load_bipartite(gadget_input), gadget_diameter),
                                   gadget_output);
            if (gadget_at->parsed())
                return emit_gadget(dcr::build_all_terminal_gadget(
                                       dcr::load_bipartite(gadget_input), gadget_diameter),
                                   gadget_output);
            return emit_gadget(dcr::build_diameter2_gadget(dcr::load_graph(gadget_input)),
                               gadget_output);
        }
        if (verify_cmd->parsed()) {
            if (verify_vc->parsed())
                return cmd_verify_vc_identity(verify_input, verify_diameter, verify_cap,
                                              verify_vc_cap->count() > 0, verify_json);
            if (verify_at->parsed())
                return cmd_verify_all_terminal(verify_input, verify_diameter, verify_cap,
                                               verify_json);
            return cmd_verify_diam2(verify_input, verify_cap, verify_d2_cap->count() > 0,
                                    verify_json);
        }
        if (covers_cmd->parsed()) {
            const dcr::BipartiteInstance bip = dcr::load_bipartite(covers_input);
            if (covers_minimum) {
                const dcr::MinCoverCount mc = dcr::count_min_vertex_covers(bip, covers_cap);
                if (covers_json) {
                    json j;
                    j["min_size"] = mc.size;
                    j["min_covers"] = mc.count.get_str();
                    std::cout << j.dump() << "\n";
                } else {
                    std::cout << "min_size=" << mc.size << "\n"
                              << "min_covers=" << mc.count << "\n";
                }
            } else {
                const dcr::BigInt covers = dcr::count_vertex_covers(bip, covers_cap);
                if (covers_json) {
                    json j;
                    j["covers"] = covers.get_str();
                    std::cout << j.dump() << "\n";
                } else {
                    std::cout << "covers=" << covers << "\n";
                }
            }
            return 0;
        }
        if (census_cmd->parsed()) {
            const dcr::Graph g = dcr::load_graph(census_input);
            const dcr::BigInt count =
                dcr::count_diameter_bounded_subgraphs(g, census_diameter, census_cap);
            if (census_json) {
                json j;
                j["subgraphs"] = count.get_str();
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "subgraphs=" << count << "\n";
            }
            return 0;
        }
    } catch (const dcr::ParseError& err) {
        std::cerr << "input error: " << err.what() << "\n";
        return 2;
    } catch (const dcr::CapExceededError& err) {
        std::cerr << "cap exceeded: " << err.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& err) {
        std::cerr << "invalid input: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 2;
}

int main(int argc, char** argv) { return run_cli(argc, argv); }
