#include "torus/toroidality.hpp"

#include <algorithm>

#include "torus/blocks.hpp"
#include "torus/errors.hpp"
#include "torus/minor.hpp"
#include "torus/planarity.hpp"

namespace torus {

std::string status_name(ToroidalStatus s) {
    switch (s) {
        case ToroidalStatus::Toroidal: return "Toroidal";
        case ToroidalStatus::NonToroidal: return "NonToroidal";
        case ToroidalStatus::NotInClass: return "NotInClass";
    }
    return "?";
}

std::string case_name(CaseTag c) {
    switch (c) {
        case CaseTag::AllPlanarBlocks: return "AllPlanarBlocks";
        case CaseTag::CaseI: return "Case-i";
        case CaseTag::CaseII: return "Case-ii";
        case CaseTag::CaseIII: return "Case-iii";
        case CaseTag::TwoNonplanarBlocks: return "TwoNonplanarBlocks";
        case CaseTag::TwoNonplanarAugmented: return "TwoNonplanarAugmented";
        case CaseTag::FailedMCase: return "FailedMCase";
        case CaseTag::NoValidM: return "NoValidM";
        case CaseTag::K33Subdivision: return "K33Subdivision";
    }
    return "?";
}

namespace {

SubdivisionWitness lift(SubdivisionWitness w, const std::vector<int>& host) {
    for (int& c : w.corner_map) c = host[c];
    for (auto& p : w.branch_paths)
        for (int& v : p) v = host[v];
    return w;
}

SubdivisionWitness restrict_to(SubdivisionWitness w, const Subgraph& sub) {
    for (int& c : w.corner_map) c = sub.local(c);
    for (auto& p : w.branch_paths)
        for (int& v : p) v = sub.local(v);
    return w;
}

std::vector<ComponentReport> report(const SideDecomposition& dec) {
    std::vector<ComponentReport> out;
    for (const auto& sc : dec.components) {
        ComponentReport r;
        r.a = sc.a;
        r.b = sc.b;
        r.vertices = sc.subgraph.graph.order();
        r.edges = sc.subgraph.graph.size();
        r.has_corner_edge = sc.has_corner_edge;
        r.augmented_planar = is_planar(sc.augmented);
        r.special = is_special(sc);
        out.push_back(r);
    }
    return out;
}

std::vector<std::size_t> nonplanar_indices(const std::vector<ComponentReport>& reps) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < reps.size(); ++i)
        if (!reps[i].augmented_planar) out.push_back(i);
    return out;
}

// Decision on a 2-connected non-planar block with no TK3,3; labels local to b.
ToroidalityVerdict decide_block(const Graph& b) {
    ToroidalityVerdict v;
    SubdivisionWitness w = find_k5_subdivision(b);
    SideDecomposition dec = decompose_by_corners(b, w);
    v.witness = w;
    v.components = report(dec);
    auto bad = nonplanar_indices(v.components);
    for (auto i : bad) v.offending.emplace_back(v.components[i].a, v.components[i].b);
    if (bad.empty()) {
        v.status = ToroidalStatus::Toroidal;
        v.tag = CaseTag::CaseI;
        return v;
    }
    if (bad.size() >= 2) {
        v.status = ToroidalStatus::NonToroidal;
        v.tag = CaseTag::TwoNonplanarAugmented;
        return v;
    }
    const SideComponent& f = dec.components[bad[0]];
    if (is_planar(f.subgraph.graph)) {
        v.status = ToroidalStatus::Toroidal;
        v.tag = CaseTag::CaseII;
        return v;
    }
    auto tm = build_m_subdivision(b, w, f);
    if (!tm) {
        v.status = ToroidalStatus::NonToroidal;
        v.tag = CaseTag::NoValidM;
        return v;
    }
    SideDecomposition mdec = m_side_components(b, *tm);
    v.tk5 = w;
    v.witness = *tm;
    v.components = report(mdec);
    v.offending.clear();
    bad = nonplanar_indices(v.components);
    for (auto i : bad) v.offending.emplace_back(v.components[i].a, v.components[i].b);
    v.status = bad.empty() ? ToroidalStatus::Toroidal : ToroidalStatus::NonToroidal;
    v.tag = bad.empty() ? CaseTag::CaseIII : CaseTag::FailedMCase;
    return v;
}

const std::vector<int>& oriented(std::vector<int>& p, int from) {
    if (p.front() != from) std::reverse(p.begin(), p.end());
    return p;
}

}  // namespace

ToroidalityVerdict decide_toroidal(const Graph& g) {
    ToroidalityVerdict v;
    SubdivisionWitness k33;
    if (!is_k33_free(g, &k33)) {
        v.status = ToroidalStatus::NotInClass;
        v.tag = CaseTag::K33Subdivision;
        v.witness = std::move(k33);
        return v;
    }
    const BlockDecomposition bd = blocks(g);
    std::vector<std::size_t> nonplanar;
    for (std::size_t i = 0; i < bd.blocks.size(); ++i)
        if (!is_planar(edge_subgraph(g, bd.blocks[i]).graph)) nonplanar.push_back(i);
    if (nonplanar.empty()) {
        v.status = ToroidalStatus::Toroidal;
        v.tag = CaseTag::AllPlanarBlocks;
        return v;
    }
    if (nonplanar.size() >= 2) {
        v.status = ToroidalStatus::NonToroidal;
        v.tag = CaseTag::TwoNonplanarBlocks;
        for (auto i : nonplanar) v.nonplanar_blocks.push_back(bd.block_vertices(i));
        return v;
    }
    const Subgraph block = edge_subgraph(g, bd.blocks[nonplanar[0]]);
    v = decide_block(block.graph);
    v.nonplanar_blocks.push_back(bd.block_vertices(nonplanar[0]));
    if (v.witness) v.witness = lift(*v.witness, block.host);
    if (v.tk5) v.tk5 = lift(*v.tk5, block.host);
    for (auto& c : v.components) {
        c.a = block.host[c.a];
        c.b = block.host[c.b];
        if (c.a > c.b) std::swap(c.a, c.b);
    }
    for (auto& [a, b] : v.offending) {
        a = block.host[a];
        b = block.host[b];
        if (a > b) std::swap(a, b);
    }
    return v;
}

std::optional<SubdivisionWitness> build_m_subdivision(const Graph& g, const SubdivisionWitness& w,
                                                      const SideComponent& f) {
    if (w.pattern != Pattern::K5) throw PreconditionError("build_m_subdivision needs a TK5");
    if (is_planar(f.augmented)) throw PreconditionError("side component is not non-planar");

    const Graph& fs = f.subgraph.graph;
    if (!is_planar(fs)) {
        const std::vector<int> pin{f.local_a(), f.local_b(), -1, -1, -1};
        if (auto inner = find_subdivision(fs, complete_graph(5), Pattern::K5, pin)) {
            SubdivisionWitness k = lift(*inner, f.subgraph.host);
            int xa = -1, xb = -1;
            std::vector<int> rest;
            for (int x = 0; x < 5; ++x) {
                if (w.corner_map[x] == f.a) xa = x;
                else if (w.corner_map[x] == f.b) xb = x;
                else rest.push_back(x);
            }
            // M vertex -> pattern vertex of the outer TK5 (0..4) or of the inner one (0,1,5..7).
            const int outer[8] = {xa, xb, rest[0], rest[1], rest[2], -1, -1, -1};
            const int inner_of[8] = {0, 1, -1, -1, -1, 2, 3, 4};
            SubdivisionWitness tm;
            tm.pattern = Pattern::M;
            tm.pattern_graph = pattern_graph(Pattern::M);
            tm.pattern_edges = tm.pattern_graph.edges();
            tm.corner_map = {f.a, f.b, w.corner_map[rest[0]], w.corner_map[rest[1]], w.corner_map[rest[2]],
                             k.corner_map[2], k.corner_map[3], k.corner_map[4]};
            for (const Edge& e : tm.pattern_edges) {
                std::vector<int> p;
                const bool central = e.u == m_central_x && e.v == m_central_y;
                if (!central && outer[e.u] >= 0 && outer[e.v] >= 0) p = w.path(outer[e.u], outer[e.v]);
                else p = k.path(inner_of[e.u], inner_of[e.v]);
                tm.branch_paths.push_back(oriented(p, tm.corner_map[e.u]));
            }
            if (validate_witness(g, tm)) return tm;
        }
    }
    if (g.order() > 16) throw BudgetExceeded("exhaustive TM search is limited to 16 vertices");
    return find_subdivision(g, m_graph(), Pattern::M);
}

AdditivityReport genus_additivity_check(const Graph& g) {
    SubdivisionWitness k33;
    if (!is_k33_free(g, &k33)) throw K33Found(std::move(k33));
    AdditivityReport out;
    const BlockDecomposition bd = blocks(g);
    int nonplanar = 0;
    for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
        Graph b = edge_subgraph(g, bd.blocks[i]).graph;
        BlockKind kind = BlockKind::Planar;
        if (!is_planar(b)) {
            ++nonplanar;
            kind = decide_toroidal(b).toroidal() ? BlockKind::ToroidalNonplanar : BlockKind::NonToroidal;
        }
        out.block_vertices.push_back(bd.block_vertices(i));
        out.kinds.push_back(kind);
        if (kind == BlockKind::NonToroidal) out.toroidal = false;
    }
    if (nonplanar >= 2) out.toroidal = false;
    return out;
}

bool validate_verdict(const Graph& g, const ToroidalityVerdict& v, std::string* why) {
    auto fail = [&](const std::string& reason) {
        if (why) *why = reason;
        return false;
    };
    std::string inner;
    if (v.witness && !validate_witness(g, *v.witness, &inner)) return fail("witness: " + inner);
    const BlockDecomposition bd = blocks(g);
    auto nonplanar_blocks = [&] {
        std::vector<std::vector<int>> out;
        for (std::size_t i = 0; i < bd.blocks.size(); ++i)
            if (!is_planar(edge_subgraph(g, bd.blocks[i]).graph)) out.push_back(bd.block_vertices(i));
        return out;
    };
    switch (v.tag) {
        case CaseTag::K33Subdivision:
            if (v.status != ToroidalStatus::NotInClass || !v.witness || v.witness->pattern != Pattern::K33)
                return fail("NotInClass needs a TK3,3");
            return true;
        case CaseTag::AllPlanarBlocks:
            if (v.status != ToroidalStatus::Toroidal) return fail("status");
            if (!nonplanar_blocks().empty()) return fail("a block is non-planar");
            return true;
        case CaseTag::TwoNonplanarBlocks: {
            if (v.status != ToroidalStatus::NonToroidal) return fail("status");
            auto np = nonplanar_blocks();
            if (v.nonplanar_blocks.size() < 2) return fail("fewer than two blocks listed");
            for (const auto& b : v.nonplanar_blocks)
                if (std::find(np.begin(), np.end(), b) == np.end()) return fail("listed block is not a non-planar block");
            return true;
        }
        default: break;
    }
    if (!v.witness) return fail("missing witness");
    const bool m_case = v.tag == CaseTag::CaseIII || v.tag == CaseTag::FailedMCase;
    if (v.witness->pattern != (m_case ? Pattern::M : Pattern::K5)) return fail("witness has the wrong pattern");
    const Edge first = v.witness->host_edges().front();
    std::size_t bi = 0;
    while (bi < bd.blocks.size() &&
           std::find(bd.blocks[bi].begin(), bd.blocks[bi].end(), first) == bd.blocks[bi].end())
        ++bi;
    if (bi == bd.blocks.size()) return fail("witness outside every block");
    const Subgraph block = edge_subgraph(g, bd.blocks[bi]);
    SideDecomposition dec = decompose_by_corners(block.graph, restrict_to(*v.witness, block));
    auto reps = report(dec);
    for (auto& c : reps) {
        c.a = block.host[c.a];
        c.b = block.host[c.b];
        if (c.a > c.b) std::swap(c.a, c.b);
    }
    if (reps.size() != v.components.size()) return fail("component count differs");
    for (std::size_t i = 0; i < reps.size(); ++i) {
        const auto &r = reps[i], &c = v.components[i];
        if (r.a != c.a || r.b != c.b || r.vertices != c.vertices || r.edges != c.edges ||
            r.has_corner_edge != c.has_corner_edge || r.augmented_planar != c.augmented_planar ||
            r.special != c.special)
            return fail("component report differs on corners " + std::to_string(c.a) + "," + std::to_string(c.b));
    }
    const auto bad = nonplanar_indices(reps);
    const bool expect_toroidal = v.tag == CaseTag::CaseI || v.tag == CaseTag::CaseII || v.tag == CaseTag::CaseIII;
    if (v.toroidal() != expect_toroidal) return fail("status does not match case");
    switch (v.tag) {
        case CaseTag::CaseI:
        case CaseTag::CaseIII:
            if (!bad.empty()) return fail("a non-planar augmented component");
            break;
        case CaseTag::CaseII:
            if (bad.size() != 1 || !reps[bad[0]].special) return fail("Case-ii needs exactly one special component");
            break;
        case CaseTag::TwoNonplanarAugmented:
            if (bad.size() < 2) return fail("fewer than two non-planar augmented components");
            break;
        case CaseTag::FailedMCase:
            if (bad.empty()) return fail("no non-planar augmented component");
            break;
        case CaseTag::NoValidM:
            if (bad.size() != 1 || reps[bad[0]].special) return fail("NoValidM needs one non-special non-planar component");
            break;
        default: break;
    }
    return true;
}

nlohmann::json witness_to_json(const SubdivisionWitness& w) {
    return {{"pattern", pattern_name(w.pattern)}, {"corners", w.corner_map}, {"paths", w.branch_paths}};
}

nlohmann::json verdict_to_json(const Graph& g, const ToroidalityVerdict& v) {
    nlohmann::json j;
    j["vertices"] = g.order();
    j["edges"] = g.size();
    j["status"] = status_name(v.status);
    j["case"] = case_name(v.tag);
    j["witness"] = v.witness ? witness_to_json(*v.witness) : nlohmann::json(nullptr);
    if (v.tk5) j["tk5"] = witness_to_json(*v.tk5);
    j["nonplanar_blocks"] = v.nonplanar_blocks;
    auto comps = nlohmann::json::array();
    for (const auto& c : v.components)
        comps.push_back({{"corners", {c.a, c.b}},
                         {"vertices", c.vertices},
                         {"edges", c.edges},
                         {"has_corner_edge", c.has_corner_edge},
                         {"augmented_planar", c.augmented_planar},
                         {"special", c.special}});
    j["components"] = comps;
    auto off = nlohmann::json::array();
    for (const auto& [a, b] : v.offending) off.push_back({a, b});
    j["offending"] = off;
    return j;
}

}  // namespace torus
