#include "torus/structure.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>

#include "torus/blocks.hpp"
#include "torus/canonical.hpp"
#include "torus/errors.hpp"

namespace torus {

namespace {

using Memo = std::unordered_map<std::string, bool>;

bool free_rec(const Graph& g, Memo& memo);

bool block_free(const Graph& b, Memo& memo) {
    if (is_planar(b)) return true;
    const bool keyed = b.order() <= 64;
    std::string key;
    if (keyed) {
        key = canonical_form(b);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
    }
    bool result = true;
    SubdivisionWitness w = kuratowski_witness(b);
    if (w.pattern == Pattern::K33) {
        result = false;
    } else {
        const auto corners = w.corners();
        std::map<std::pair<int, int>, std::vector<Edge>> sides;
        for (const auto& br : bridges_of(b, corners)) {
            if (br.attachment_vertices.size() >= 3) {
                result = false;
                break;
            }
            if (br.attachment_vertices.size() < 2) throw PreconditionError("block has a bridge with one attachment");
            auto& edges = sides[{br.attachment_vertices[0], br.attachment_vertices[1]}];
            edges.insert(edges.end(), br.edges.begin(), br.edges.end());
        }
        if (result)
            for (auto& [pair, edges] : sides) {
                Subgraph side = edge_subgraph(b, edges);
                Graph aug = side.graph;
                aug.add_edge_if_absent(side.local(pair.first), side.local(pair.second));
                if (!free_rec(aug, memo)) {
                    result = false;
                    break;
                }
            }
    }
    if (keyed) memo.emplace(std::move(key), result);
    return result;
}

bool free_rec(const Graph& g, Memo& memo) {
    if (is_planar(g)) return true;
    for (const auto& block : blocks(g).blocks)
        if (!block_free(edge_subgraph(g, block).graph, memo)) return false;
    return true;
}

bool decide_free(const Graph& g) {
    Memo memo;
    return free_rec(g, memo);
}

// Edge-minimal subset of `edges` that still holds a TK3,3: exactly a TK3,3.
std::vector<Edge> minimal_k33_edges(const Graph& g, std::vector<Edge> edges) {
    for (std::size_t i = 0; i < edges.size();) {
        std::vector<Edge> trial = edges;
        trial.erase(trial.begin() + static_cast<long>(i));
        if (!decide_free(edge_subgraph(g, trial).graph)) edges = std::move(trial);
        else ++i;
    }
    return edges;
}

SubdivisionWitness k33_from(const Graph& g, std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    if (decide_free(edge_subgraph(g, edges).graph)) {
        edges = g.edges();
        if (decide_free(g)) throw PreconditionError("graph has no K3,3-subdivision");
    }
    return witness_from_kuratowski_edges(g, minimal_k33_edges(g, std::move(edges)));
}

[[noreturn]] void report_k33(const Graph& g, const SubdivisionWitness& w, const BridgeOf& br) {
    std::vector<Edge> edges = w.host_edges();
    edges.insert(edges.end(), br.edges.begin(), br.edges.end());
    throw K33Found(k33_from(g, std::move(edges)));
}

}  // namespace

const SideComponent& SideDecomposition::component(int a, int b) const {
    if (a > b) std::swap(a, b);
    for (const auto& c : components)
        if (c.a == a && c.b == b) return c;
    throw PreconditionError("no side component on these corners");
}

SideDecomposition decompose_by_corners(const Graph& g, const SubdivisionWitness& w) {
    std::string why;
    if (!validate_witness(g, w, &why)) throw PreconditionError("invalid witness: " + why);
    if (w.pattern != Pattern::K5 && w.pattern != Pattern::M) throw PreconditionError("decomposition needs a TK5 or TM");
    SideDecomposition out;
    out.witness = w;
    out.corner_set = w.corners();

    std::map<std::pair<int, int>, std::size_t> slot;
    for (const Edge& pe : w.pattern_edges) {
        int a = w.corner_map[pe.u], b = w.corner_map[pe.v];
        if (a > b) std::swap(a, b);
        slot[{a, b}] = out.components.size();
        SideComponent sc;
        sc.a = a;
        sc.b = b;
        out.components.push_back(std::move(sc));
    }
    std::vector<std::vector<Edge>> edges(out.components.size());
    for (const auto& br : bridges_of(g, out.corner_set)) {
        const auto& att = br.attachment_vertices;
        if (att.size() >= 3) report_k33(g, w, br);
        if (att.size() < 2) throw PreconditionError("graph is not 2-connected");
        auto it = slot.find({att[0], att[1]});
        if (it == slot.end()) report_k33(g, w, br);
        auto& bucket = edges[it->second];
        bucket.insert(bucket.end(), br.edges.begin(), br.edges.end());
    }
    for (std::size_t i = 0; i < out.components.size(); ++i) {
        SideComponent& sc = out.components[i];
        sc.subgraph = edge_subgraph(g, edges[i]);
        sc.has_corner_edge = g.has_edge(sc.a, sc.b);
        sc.augmented = sc.subgraph.graph;
        sc.augmented.add_edge_if_absent(sc.local_a(), sc.local_b());
    }
    return out;
}

bool is_special(const SideComponent& sc) {
    return !sc.has_corner_edge && is_planar(sc.subgraph.graph) && !is_planar(sc.augmented);
}

bool is_k33_free(const Graph& g, SubdivisionWitness* witness) {
    if (decide_free(g)) return true;
    if (witness) *witness = k33_witness(g);
    return false;
}

SubdivisionWitness k33_witness(const Graph& g) { return k33_from(g, g.edges()); }

SideDecomposition m_side_components(const Graph& g, const SubdivisionWitness& w) {
    if (w.pattern != Pattern::M) throw PreconditionError("m_side_components needs a TM");
    return decompose_by_corners(g, w);
}

Graph m_graph() { return pattern_graph(Pattern::M); }

}  // namespace torus
