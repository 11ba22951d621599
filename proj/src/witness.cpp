#include "torus/witness.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "torus/errors.hpp"

namespace torus {

std::string pattern_name(Pattern p) {
    switch (p) {
        case Pattern::K5: return "K5";
        case Pattern::K33: return "K33";
        case Pattern::M: return "M";
        case Pattern::Other: break;
    }
    return "other";
}

Graph pattern_graph(Pattern p) {
    switch (p) {
        case Pattern::K5: return complete_graph(5);
        case Pattern::K33: return complete_bipartite(3, 3);
        case Pattern::M: {
            // x = 0, y = 1; the two K5's are {0,1,2,3,4} and {0,1,5,6,7}.
            Graph m(8);
            for (int half : {2, 5}) {
                const int vs[5] = {0, 1, half, half + 1, half + 2};
                for (int i = 0; i < 5; ++i)
                    for (int j = i + 1; j < 5; ++j) m.add_edge_if_absent(vs[i], vs[j]);
            }
            return m;
        }
        case Pattern::Other: break;
    }
    throw PreconditionError("no fixed graph for pattern 'other'");
}

std::vector<int> SubdivisionWitness::corners() const {
    std::vector<int> c = corner_map;
    std::sort(c.begin(), c.end());
    return c;
}

std::vector<Edge> SubdivisionWitness::host_edges() const {
    std::vector<Edge> out;
    for (const auto& p : branch_paths)
        for (std::size_t i = 0; i + 1 < p.size(); ++i) out.emplace_back(p[i], p[i + 1]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<int> SubdivisionWitness::host_vertices() const {
    std::vector<int> out = corner_map;
    for (const auto& p : branch_paths) out.insert(out.end(), p.begin(), p.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

const std::vector<int>& SubdivisionWitness::path(int x, int y) const {
    auto it = std::find(pattern_edges.begin(), pattern_edges.end(), Edge(x, y));
    if (it == pattern_edges.end()) throw PreconditionError("pattern has no such edge");
    return branch_paths[it - pattern_edges.begin()];
}

bool validate_witness(const Graph& host, const SubdivisionWitness& w, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const Graph& h = w.pattern_graph;
    if (static_cast<int>(w.corner_map.size()) != h.order()) return fail("corner map size differs from pattern order");
    if (w.pattern_edges != h.edges()) return fail("pattern edge list does not match pattern graph");
    if (w.branch_paths.size() != w.pattern_edges.size()) return fail("one branch path per pattern edge required");
    std::set<int> corner_set;
    for (int x = 0; x < h.order(); ++x) {
        int c = w.corner_map[x];
        if (!host.has_vertex(c)) return fail("corner outside host");
        if (!corner_set.insert(c).second) return fail("corner map not injective");
        if (host.degree(c) < h.degree(x)) return fail("corner degree below pattern degree");
    }
    std::set<int> interiors;
    for (std::size_t i = 0; i < w.pattern_edges.size(); ++i) {
        const auto& p = w.branch_paths[i];
        const Edge pe = w.pattern_edges[i];
        if (p.size() < 2) return fail("branch path too short");
        bool forward = p.front() == w.corner_map[pe.u] && p.back() == w.corner_map[pe.v];
        bool backward = p.front() == w.corner_map[pe.v] && p.back() == w.corner_map[pe.u];
        if (!forward && !backward) return fail("branch path endpoints do not match corners");
        for (std::size_t k = 0; k + 1 < p.size(); ++k)
            if (!host.has_edge(p[k], p[k + 1])) return fail("branch path uses a non-edge");
        for (std::size_t k = 1; k + 1 < p.size(); ++k) {
            if (corner_set.count(p[k])) return fail("branch path passes through a corner");
            if (!interiors.insert(p[k]).second) return fail("branch paths are not internally disjoint");
        }
    }
    return true;
}

SubdivisionWitness witness_from_kuratowski_edges(const Graph& host, const std::vector<Edge>& edges) {
    std::map<int, std::vector<int>> adj;
    for (const Edge& e : edges) {
        if (!host.has_edge(e)) throw PreconditionError("Kuratowski edge not in host");
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<int> corners;
    for (auto& [v, nb] : adj) {
        if (nb.size() >= 3) corners.push_back(v);
        else if (nb.size() != 2) throw PreconditionError("edge set is not a subdivision (degree-1 vertex)");
    }
    Pattern pattern;
    if (corners.size() == 5 && std::all_of(corners.begin(), corners.end(), [&](int c) { return adj[c].size() == 4; }))
        pattern = Pattern::K5;
    else if (corners.size() == 6 &&
             std::all_of(corners.begin(), corners.end(), [&](int c) { return adj[c].size() == 3; }))
        pattern = Pattern::K33;
    else
        throw PreconditionError("edge set is neither a TK5 nor a TK3,3");

    auto is_corner = [&](int v) { return std::binary_search(corners.begin(), corners.end(), v); };
    // Trace every branch path starting at every corner.
    std::vector<std::vector<int>> paths;
    for (int c : corners)
        for (int first : adj[c]) {
            std::vector<int> p{c, first};
            while (!is_corner(p.back())) {
                const auto& nb = adj[p.back()];
                int next = nb[0] == p[p.size() - 2] ? nb[1] : nb[0];
                p.push_back(next);
                if (p.size() > edges.size() + 1) throw PreconditionError("edge set contains a stray cycle");
            }
            if (c < p.back()) paths.push_back(std::move(p));
        }

    SubdivisionWitness w;
    w.pattern = pattern;
    w.pattern_graph = pattern_graph(pattern);
    w.pattern_edges = w.pattern_graph.edges();
    std::map<int, int> index;
    if (pattern == Pattern::K5) {
        w.corner_map = corners;
    } else {
        // Part A holds corners[0] and everything not joined to it by a branch path.
        std::set<int> part_b;
        for (const auto& p : paths)
            if (p.front() == corners[0]) part_b.insert(p.back());
            else if (p.back() == corners[0]) part_b.insert(p.front());
        std::vector<int> a, b;
        for (int c : corners) (part_b.count(c) ? b : a).push_back(c);
        if (a.size() != 3 || b.size() != 3) throw PreconditionError("TK3,3 bipartition is malformed");
        w.corner_map = a;
        w.corner_map.insert(w.corner_map.end(), b.begin(), b.end());
    }
    for (int x = 0; x < static_cast<int>(w.corner_map.size()); ++x) index[w.corner_map[x]] = x;
    w.branch_paths.assign(w.pattern_edges.size(), {});
    for (auto& p : paths) {
        Edge pe(index.at(p.front()), index.at(p.back()));
        auto it = std::find(w.pattern_edges.begin(), w.pattern_edges.end(), pe);
        if (it == w.pattern_edges.end()) throw PreconditionError("branch path joins non-adjacent pattern vertices");
        auto& slot = w.branch_paths[it - w.pattern_edges.begin()];
        if (!slot.empty()) throw PreconditionError("two branch paths for one pattern edge");
        if (p.front() != w.corner_map[pe.u]) std::reverse(p.begin(), p.end());
        slot = std::move(p);
    }
    if (w.host_edges().size() != edges.size()) throw PreconditionError("edge set has edges outside the subdivision");
    std::string why;
    if (!validate_witness(host, w, &why)) throw PreconditionError("extracted witness invalid: " + why);
    return w;
}

bool validate_minor_witness(const Graph& host, const Graph& pattern, const MinorWitness& w) {
    if (static_cast<int>(w.branch_sets.size()) != pattern.order()) return false;
    std::vector<int> owner(host.order(), -1);
    for (int x = 0; x < pattern.order(); ++x) {
        const auto& set = w.branch_sets[x];
        if (set.empty()) return false;
        for (int v : set) {
            if (!host.has_vertex(v) || owner[v] >= 0) return false;
            owner[v] = x;
        }
    }
    // Each branch set induces a connected subgraph.
    for (int x = 0; x < pattern.order(); ++x) {
        const auto& set = w.branch_sets[x];
        std::vector<int> seen{set[0]};
        std::set<int> visited{set[0]};
        for (std::size_t i = 0; i < seen.size(); ++i)
            for (int nb : host.neighbors(seen[i]))
                if (owner[nb] == x && visited.insert(nb).second) seen.push_back(nb);
        if (seen.size() != set.size()) return false;
    }
    for (const Edge& e : pattern.edges()) {
        bool joined = false;
        for (int v : w.branch_sets[e.u])
            for (int nb : host.neighbors(v))
                if (owner[nb] == e.v) joined = true;
        if (!joined) return false;
    }
    return true;
}

}  // namespace torus
