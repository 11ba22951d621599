// torus-cli: toroidality of graphs with no K3,3-subdivision.
//
// Exit codes: 0 answered, 1 input error, 2 class violation, 3 budget refusal.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "torus/canonical.hpp"
#include "torus/errors.hpp"
#include "torus/genus.hpp"
#include "torus/graph_io.hpp"
#include "torus/obstructions.hpp"
#include "torus/structure.hpp"
#include "torus/toroidality.hpp"

using namespace torus;
using nlohmann::json;

namespace {

enum Exit { Answered = 0, BadInput = 1, NotInClass = 2, OverBudget = 3 };

struct Input {
    std::string path = "-";
    std::string format = "edgelist";
    std::vector<std::string> names;
};

void add_input(CLI::App* cmd, Input& in) {
    cmd->add_option("file", in.path, "Input file, '-' for stdin")->capture_default_str();
    cmd->add_option("-f,--format", in.format, "edgelist or graph6")
        ->check(CLI::IsMember({"edgelist", "graph6"}))
        ->capture_default_str();
    cmd->add_option("-n,--name", in.names, "Built-in graph instead of a file (G1..G11, K5, K33, M)");
}

std::vector<Graph> load(const Input& in) {
    if (!in.names.empty()) {
        std::vector<Graph> out;
        for (const auto& n : in.names) out.push_back(builtin(n));
        return out;
    }
    const GraphFormat fmt = in.format == "graph6" ? GraphFormat::Graph6 : GraphFormat::EdgeList;
    if (in.path == "-") return read_graphs(std::cin, fmt);
    std::ifstream file(in.path);
    if (!file) throw InputError("cannot open " + in.path);
    return read_graphs(file, fmt);
}

std::string slurp(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw InputError("cannot open " + path);
    std::ostringstream s;
    s << file.rdbuf();
    return s.str();
}

// A builtin name, a graph6 string, or a file holding one graph in either format.
Graph graph_argument(const std::string& arg) {
    try {
        return builtin(arg);
    } catch (const InputError&) {
    }
    std::ifstream file(arg);
    if (file) {
        std::ostringstream s;
        s << file.rdbuf();
        const std::string text = s.str();
        std::istringstream edge(text);
        try {
            auto gs = read_edge_lists(edge);
            if (gs.size() == 1) return gs[0];
        } catch (const InputError&) {
        }
        std::istringstream g6(text);
        auto gs = read_graph6_lines(g6);
        if (gs.size() != 1) throw InputError(arg + " must hold exactly one graph");
        return gs[0];
    }
    return parse_graph6(arg);
}

std::uint64_t oracle_budget(std::uint64_t flag) {
    if (flag) return flag;
    if (const char* env = std::getenv("TORUS_ORACLE_BUDGET")) {
        try {
            std::size_t used = 0;
            auto v = std::stoull(env, &used);
            if (used == std::string(env).size() && v > 0) return v;
        } catch (const std::exception&) {
        }
        throw InputError("TORUS_ORACLE_BUDGET must be a positive integer");
    }
    return OracleOptions{}.budget;
}

std::vector<ObstructionRecord> load_catalog(const std::string& g6, const std::string& manifest) {
    if (g6.empty() && manifest.empty()) return catalog();
    if (g6.empty() || manifest.empty()) throw InputError("--catalog and --manifest go together");
    return parse_catalog(slurp(g6), slurp(manifest));
}

void print(const json& j, bool as_json, const std::string& text) {
    if (as_json) std::cout << j.dump(2) << '\n';
    else std::cout << text;
}

int cmd_decide(const Input& in, bool as_json) {
    auto graphs = load(in);
    json results = json::array();
    std::ostringstream text;
    int code = Answered;
    for (const Graph& g : graphs) {
        auto v = decide_toroidal(g);
        results.push_back(verdict_to_json(g, v));
        text << status_name(v.status) << ' ' << case_name(v.tag) << '\n';
        if (v.status == ToroidalStatus::NotInClass) code = NotInClass;
    }
    print(json{{"results", results}}, as_json, text.str());
    return code;
}

int cmd_verify(const std::string& kind, const std::string& g6, const std::string& manifest, bool as_json) {
    const auto records = load_catalog(g6, manifest);
    const bool minor = kind == "minor";
    json items = json::array(), failures = json::array();
    std::ostringstream text;
    int passes = 0;
    for (const auto& r : records) {
        auto rep = minor ? verify_minor_obstruction(r.graph) : verify_topological_obstruction(r.graph);
        passes += rep.passed;
        // A minor-order record must pass both verifiers; a topological-only one only the second.
        const bool expected = minor ? r.kind == ObstructionKind::MinorOrder : r.kind != ObstructionKind::Reference;
        json item = report_to_json(rep);
        item["name"] = r.name;
        item["kind"] = kind_name(r.kind);
        item["expected"] = expected;
        items.push_back(item);
        if (rep.passed != expected) failures.push_back(r.name);
        text << r.name << ' ' << (rep.passed ? "pass" : "fail");
        if (!rep.passed) text << " (" << rep.failure << ')';
        text << (rep.passed == expected ? "" : "  MISMATCH") << '\n';
    }
    text << passes << " of " << records.size() << " pass the " << kind << " verifier\n";
    print(json{{"kind", kind}, {"passes", passes}, {"failures", failures}, {"reports", items}}, as_json, text.str());
    return Answered;
}

int cmd_splits(int max_vertices, const std::string& g6, const std::string& manifest, bool as_json) {
    const auto records = load_catalog(g6, manifest);
    std::vector<Graph> seeds;
    for (const auto& r : records)
        if (r.kind == ObstructionKind::MinorOrder) seeds.push_back(r.graph);
    SplitOptions opt;
    opt.max_vertices = max_vertices;
    auto found = enumerate_splits(seeds, opt);
    json items = json::array();
    std::ostringstream text;
    for (const Graph& g : found) {
        std::string match;
        for (const auto& r : records)
            if (is_isomorphic(r.graph, g)) match = r.name;
        items.push_back({{"graph6", to_graph6(g)}, {"vertices", g.order()}, {"edges", g.size()},
                         {"catalog", match.empty() ? json(nullptr) : json(match)}});
        text << to_graph6(g) << ' ' << (match.empty() ? "-" : match) << '\n';
    }
    text << found.size() << " classes\n";
    print(json{{"count", found.size()}, {"graphs", items}}, as_json, text.str());
    return Answered;
}

int cmd_genus(const Input& in, bool count, std::uint64_t budget_flag, bool serial, bool as_json) {
    OracleOptions opt;
    opt.budget = oracle_budget(budget_flag);
    opt.parallel = !serial;
    json results = json::array();
    std::ostringstream text;
    for (const Graph& g : load(in)) {
        json item{{"vertices", g.order()}, {"edges", g.size()}, {"genus", min_genus(g, opt)}};
        text << item["genus"].get<int>();
        if (count) {
            item["torus_embeddings"] = count_torus_embeddings(g, opt);
            text << ' ' << item["torus_embeddings"].get<std::size_t>();
        }
        text << '\n';
        results.push_back(item);
    }
    print(json{{"results", results}}, as_json, text.str());
    return Answered;
}

int cmd_isomorphic(const std::string& a, const std::string& b, bool as_json) {
    const bool iso = is_isomorphic(graph_argument(a), graph_argument(b));
    print(json{{"isomorphic", iso}}, as_json, iso ? "true\n" : "false\n");
    return Answered;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Torus embeddability for graphs with no K3,3-subdivision"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Emit JSON")->configurable(false);

    Input decide_in, genus_in;
    auto* decide = app.add_subcommand("decide", "Decide toroidality with a certificate");
    add_input(decide, decide_in);

    std::string kind = "topological", cat_g6, cat_manifest;
    auto* verify = app.add_subcommand("verify-obstructions", "Check the obstruction catalog");
    verify->add_option("-k,--kind", kind, "minor or topological")
        ->check(CLI::IsMember({"minor", "topological"}))
        ->capture_default_str();

    int max_vertices = 16;
    auto* splits = app.add_subcommand("splits", "Regenerate topological obstructions by vertex splitting");
    splits->add_option("--max-vertices", max_vertices, "Vertex ceiling")->capture_default_str();

    for (auto* cmd : {verify, splits}) {
        cmd->add_option("--catalog", cat_g6, "graph6 file replacing the built-in catalog");
        cmd->add_option("--manifest", cat_manifest, "Manifest for --catalog");
    }

    bool count = false, serial = false;
    std::uint64_t budget = 0;
    auto* genus = app.add_subcommand("genus", "Exact orientable genus by rotation-system search");
    add_input(genus, genus_in);
    genus->add_flag("--count-torus", count, "Also count torus embeddings up to symmetry");
    genus->add_option("--budget", budget, "Search-node budget (default: $TORUS_ORACLE_BUDGET or 1e8)");
    genus->add_flag("--serial", serial, "Use the serial reference kernel");

    std::string iso_a, iso_b;
    auto* iso = app.add_subcommand("isomorphic", "Isomorphism of two graphs (names, graph6 or files)");
    iso->add_option("a", iso_a)->required();
    iso->add_option("b", iso_b)->required();

    for (auto* cmd : {decide, verify, splits, genus, iso}) cmd->add_flag("--json", as_json, "Emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? Answered : BadInput;
    }
    try {
        if (*decide) return cmd_decide(decide_in, as_json);
        if (*verify) return cmd_verify(kind, cat_g6, cat_manifest, as_json);
        if (*splits) return cmd_splits(max_vertices, cat_g6, cat_manifest, as_json);
        if (*genus) return cmd_genus(genus_in, count, budget, serial, as_json);
        if (*iso) return cmd_isomorphic(iso_a, iso_b, as_json);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return BadInput;
    } catch (const ClassViolation& e) {
        std::cerr << "class violation: " << e.what() << '\n';
        return NotInClass;
    } catch (const BudgetExceeded& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return OverBudget;
    } catch (const PreconditionError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return BadInput;
    }
    return BadInput;
}
