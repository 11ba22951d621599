#include "torus/obstructions.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "catalog_data.hpp"
#include "torus/canonical.hpp"
#include "torus/errors.hpp"
#include "torus/graph_io.hpp"
#include "torus/structure.hpp"

namespace torus {

std::string kind_name(ObstructionKind k) {
    switch (k) {
        case ObstructionKind::MinorOrder: return "minor-order";
        case ObstructionKind::TopologicalOnly: return "topological-only";
        case ObstructionKind::Reference: return "reference";
    }
    return "?";
}

namespace {

// M with its central edge replaced by K5 - e, the ends of e glued onto x and y.
Graph g4_graph() {
    Graph g = delete_edge(m_graph(), Edge(m_central_x, m_central_y));
    Graph k5e = delete_edge(complete_graph(5), Edge(0, 1));
    const std::vector<int> glue_map{m_central_x, m_central_y, -1, -1, -1};
    return glue(g, k5e, glue_map);
}

ObstructionKind parse_kind(const std::string& s) {
    if (s == "minor-order") return ObstructionKind::MinorOrder;
    if (s == "topological-only") return ObstructionKind::TopologicalOnly;
    if (s == "reference") return ObstructionKind::Reference;
    throw InputError("unknown obstruction kind '" + s + "'");
}

const std::vector<ObstructionRecord>& stored() {
    static const std::vector<ObstructionRecord> records = parse_catalog(catalog_graph6_text, catalog_manifest_text);
    return records;
}

}  // namespace

std::vector<ObstructionRecord> parse_catalog(const std::string& graph6_text, const std::string& manifest_text) {
    std::istringstream g6(graph6_text);
    std::vector<Graph> graphs = read_graph6_lines(g6);
    std::vector<std::pair<std::string, ObstructionKind>> names;
    std::istringstream in(manifest_text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string name, kind, extra;
        if (!(fields >> name)) continue;
        if (!(fields >> kind) || (fields >> extra)) throw InputError("manifest lines are 'name kind'");
        names.emplace_back(name, parse_kind(kind));
    }
    if (names.size() != graphs.size()) throw InputError("manifest and graph6 file differ in length");
    std::vector<ObstructionRecord> out;
    for (std::size_t i = 0; i < graphs.size(); ++i) out.push_back({names[i].first, graphs[i], names[i].second});
    return out;
}

Graph builtin(const std::string& name) {
    if (name == "K5") return complete_graph(5);
    if (name == "K33") return complete_bipartite(3, 3);
    if (name == "M") return m_graph();
    if (name == "G4") return g4_graph();
    for (const auto& r : stored())
        if (r.name == name) return r.graph;
    throw InputError("unknown graph name '" + name + "'");
}

const std::vector<ObstructionRecord>& catalog() {
    static const std::vector<ObstructionRecord> records = [] {
        std::vector<ObstructionRecord> out;
        for (int i = 1; i <= 11; ++i) {
            const std::string name = "G" + std::to_string(i);
            ObstructionKind kind = i <= 4 ? ObstructionKind::MinorOrder : ObstructionKind::TopologicalOnly;
            for (const auto& r : stored())
                if (r.name == name) kind = r.kind;
            out.push_back({name, builtin(name), kind});
        }
        for (const auto& r : out) {
            if (r.graph.min_degree() < 3) throw PreconditionError(r.name + " has a vertex of degree below 3");
            if (!is_k33_free(r.graph)) throw PreconditionError(r.name + " contains a K3,3-subdivision");
        }
        return out;
    }();
    return records;
}

namespace {

ObstructionReport verify(const Graph& g, bool need_contractions) {
    ObstructionReport r;
    auto fail = [&](const std::string& why) {
        if (r.failure.empty()) r.failure = why;
    };
    r.min_degree_ok = g.order() > 0 && g.min_degree() >= 3;
    if (!r.min_degree_ok) fail("minimum degree below 3");
    const auto whole = decide_toroidal(g);
    r.status = whole.status;
    r.tag = whole.tag;
    r.nontoroidal = whole.status == ToroidalStatus::NonToroidal;
    if (whole.status == ToroidalStatus::NotInClass) r.in_class = false;
    if (!r.nontoroidal) fail(whole.status == ToroidalStatus::NotInClass ? "contains a K3,3-subdivision" : "toroidal");
    r.deletion_clause = r.contraction_clause = true;
    for (const Edge& e : g.edges()) {
        auto d = decide_toroidal(delete_edge(g, e));
        r.deletions.push_back({e, d.status, d.tag});
        if (d.status == ToroidalStatus::NotInClass) r.in_class = false;
        if (!d.toroidal()) r.deletion_clause = false;
        auto c = decide_toroidal(contract_edge(g, e));
        r.contractions.push_back({e, c.status, c.tag});
        if (c.status == ToroidalStatus::NotInClass) r.in_class = false;
        if (!c.toroidal()) r.contraction_clause = false;
    }
    if (!r.in_class) fail("a minor left the K3,3-free class");
    if (!r.deletion_clause) fail("some edge deletion is not toroidal");
    if (need_contractions && !r.contraction_clause) fail("some edge contraction is not toroidal");
    r.passed = r.failure.empty();
    return r;
}

}  // namespace

ObstructionReport verify_minor_obstruction(const Graph& g) { return verify(g, true); }
ObstructionReport verify_topological_obstruction(const Graph& g) { return verify(g, false); }

nlohmann::json report_to_json(const ObstructionReport& r) {
    auto outcomes = [](const std::vector<EdgeOutcome>& list) {
        auto arr = nlohmann::json::array();
        for (const auto& o : list)
            arr.push_back({{"edge", {o.edge.u, o.edge.v}}, {"status", status_name(o.status)}, {"case", case_name(o.tag)}});
        return arr;
    };
    return {{"passed", r.passed},
            {"failure", r.failure},
            {"min_degree_ok", r.min_degree_ok},
            {"status", status_name(r.status)},
            {"case", case_name(r.tag)},
            {"nontoroidal", r.nontoroidal},
            {"deletion_clause", r.deletion_clause},
            {"contraction_clause", r.contraction_clause},
            {"in_class", r.in_class},
            {"deletions", outcomes(r.deletions)},
            {"contractions", outcomes(r.contractions)}};
}

Graph apply_split(const Graph& g, const SplitOperation& s) {
    Graph out = g;
    const int w = out.add_vertex();
    for (int x : s.move) {
        out = delete_edge(out, Edge(s.vertex, x));
        out.add_edge(w, x);
    }
    out.add_edge(s.vertex, w);
    return out;
}

std::vector<SplitOperation> all_splits(const Graph& g) {
    std::vector<SplitOperation> out;
    for (int v = 0; v < g.order(); ++v) {
        const auto& nb = g.neighbors(v);
        const int d = static_cast<int>(nb.size());
        if (d < 4 || d > 24) continue;
        // The first neighbour always stays, so each unordered partition appears once.
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << (d - 1)); ++mask) {
            SplitOperation s{v, {nb[0]}, {}};
            for (int i = 1; i < d; ++i) (mask >> (i - 1) & 1 ? s.move : s.keep).push_back(nb[i]);
            if (s.keep.size() >= 2 && s.move.size() >= 2) out.push_back(std::move(s));
        }
    }
    return out;
}

std::vector<Graph> enumerate_splits(const std::vector<Graph>& seeds, const SplitOptions& options) {
    std::set<std::string> visited;
    std::vector<Graph> frontier, found;
    for (const Graph& s : seeds)
        if (visited.insert(canonical_form(s)).second) frontier.push_back(s);
    while (!frontier.empty()) {
        const long count = static_cast<long>(frontier.size());
        std::vector<char> keep(count, 0);
        std::vector<std::vector<Graph>> children(count);
#pragma omp parallel for schedule(dynamic, 1) if (options.parallel)
        for (long i = 0; i < count; ++i) {
            const Graph& g = frontier[i];
            if (!is_k33_free(g) || decide_toroidal(g).toroidal()) continue;
            keep[i] = verify_topological_obstruction(g).passed;
            if (g.order() >= options.max_vertices) continue;
            for (const auto& s : all_splits(g)) {
                Graph h = apply_split(g, s);
                std::string key = canonical_form(h);
                bool fresh;
#pragma omp critical(split_visited)
                fresh = visited.insert(std::move(key)).second;
                if (fresh) children[i].push_back(std::move(h));
            }
        }
        std::vector<Graph> next;
        for (long i = 0; i < count; ++i) {
            if (keep[i]) found.push_back(frontier[i]);
            for (auto& h : children[i]) next.push_back(std::move(h));
        }
        frontier = std::move(next);
    }
    std::vector<std::tuple<int, int, std::string, Graph>> keyed;
    for (auto& g : found) keyed.emplace_back(g.order(), g.size(), canonical_form(g), std::move(g));
    std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
        return std::tie(std::get<0>(x), std::get<1>(x), std::get<2>(x)) <
               std::tie(std::get<0>(y), std::get<1>(y), std::get<2>(y));
    });
    std::vector<Graph> out;
    for (auto& k : keyed) out.push_back(std::move(std::get<3>(k)));
    return out;
}

}  // namespace torus
