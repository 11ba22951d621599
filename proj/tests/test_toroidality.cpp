#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "torus/enumerate.hpp"
#include "torus/errors.hpp"
#include "torus/genus.hpp"
#include "torus/minor.hpp"
#include "torus/obstructions.hpp"
#include "torus/toroidality.hpp"

using namespace torus;

namespace {

// K5 with the edges listed replaced by copies of K5 - e glued on their ends.
Graph k5_with_special(std::initializer_list<Edge> replaced) {
    Graph g = complete_graph(5);
    Graph k5e = delete_edge(complete_graph(5), Edge(0, 1));
    for (Edge e : replaced) {
        g = delete_edge(g, e);
        const std::vector<int> glue_map{e.u, e.v, -1, -1, -1};
        g = glue(g, k5e, glue_map);
    }
    return g;
}

}  // namespace

TEST_CASE("decide_toroidal examples") {
    auto v = decide_toroidal(complete_graph(4));
    CHECK(v.status == ToroidalStatus::Toroidal);
    CHECK(v.tag == CaseTag::AllPlanarBlocks);

    v = decide_toroidal(complete_graph(5));
    CHECK(v.status == ToroidalStatus::Toroidal);
    CHECK(v.tag == CaseTag::CaseI);
    CHECK(v.components.size() == 10);
    for (const auto& c : v.components) CHECK(c.edges == 1);

    v = decide_toroidal(builtin("G4"));
    CHECK(v.status == ToroidalStatus::NonToroidal);
    CHECK(v.tag == CaseTag::FailedMCase);

    v = decide_toroidal(complete_bipartite(3, 3));
    CHECK(v.status == ToroidalStatus::NotInClass);
    REQUIRE(v.witness);
    CHECK(v.witness->pattern == Pattern::K33);

    v = decide_toroidal(Graph(0));
    CHECK(v.toroidal());
}

TEST_CASE("the M-graph is toroidal") {
    Graph m = m_graph();
    auto v = decide_toroidal(m);
    CHECK(v.toroidal());
    CHECK((v.tag == CaseTag::CaseI || v.tag == CaseTag::CaseIII));
    // Independent confirmations: a genus-1 rotation from random search, and the exact oracle.
    auto r = random_embedding_search(m, 1, 17);
    REQUIRE(r);
    CHECK(trace_faces(m, *r).genus == 1);
    CHECK(min_genus(m) == 1);
}

TEST_CASE("Case-ii: one special side component") {
    Graph g = k5_with_special({Edge(0, 1)});
    auto v = decide_toroidal(g);
    CHECK(v.status == ToroidalStatus::Toroidal);
    CHECK(v.tag == CaseTag::CaseII);
    CHECK(min_genus(g) == 1);
}

TEST_CASE("two non-planar augmented components force a G1 or G2 minor") {
    for (auto pair : {std::pair{Edge(0, 1), Edge(2, 3)}, std::pair{Edge(0, 1), Edge(1, 2)}}) {
        Graph g = k5_with_special({pair.first, pair.second});
        // The TK5 on the original five vertices, routed through one vertex of each copy.
        SubdivisionWitness w = find_k5_subdivision(complete_graph(5));
        for (int x = 0; x < 5; ++x) w.corner_map[x] = x;
        for (std::size_t i = 0; i < w.pattern_edges.size(); ++i) {
            const Edge e = w.pattern_edges[i];
            w.branch_paths[i] = {e.u, e.v};
            if (e == pair.first) w.branch_paths[i] = {e.u, 5, e.v};
            if (e == pair.second) w.branch_paths[i] = {e.u, 8, e.v};
        }
        int nonplanar = 0;
        for (const auto& sc : decompose_by_corners(g, w).components) nonplanar += !is_planar(sc.augmented);
        CHECK(nonplanar == 2);

        auto v = decide_toroidal(g);
        CHECK(v.status == ToroidalStatus::NonToroidal);
        CHECK((has_minor(g, builtin("G2")) || has_minor(g, builtin("G1"))));
    }
    // Whatever TK5 is found, the verdict implies the minor on random sums too.
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Graph g = corpus::random_k33_free(seed, 11);
        if (decide_toroidal(g).tag != CaseTag::TwoNonplanarAugmented) continue;
        CHECK((has_minor(g, builtin("G2")) || has_minor(g, builtin("G1"))));
    }
}

TEST_CASE("blocks and additivity") {
    Graph two = disjoint_union(complete_graph(5), complete_graph(5));
    auto v = decide_toroidal(two);
    CHECK(v.tag == CaseTag::TwoNonplanarBlocks);
    CHECK(v.nonplanar_blocks.size() == 2);
    CHECK(min_genus(two) == 2);

    const std::vector<int> at_vertex{0, -1, -1, -1, -1};
    Graph shared = glue(complete_graph(5), complete_graph(5), at_vertex);
    CHECK(decide_toroidal(shared).tag == CaseTag::TwoNonplanarBlocks);
    auto rep = genus_additivity_check(shared);
    CHECK_FALSE(rep.toroidal);
    CHECK(rep.kinds.size() == 2);

    Graph mixed = disjoint_union(complete_graph(5), complete_graph(4));
    CHECK(decide_toroidal(mixed).toroidal());
    rep = genus_additivity_check(mixed);
    CHECK(rep.toroidal);
    int nonplanar = 0;
    for (auto k : rep.kinds) nonplanar += k != BlockKind::Planar;
    CHECK(nonplanar == 1);

    CHECK_THROWS_AS(genus_additivity_check(complete_bipartite(3, 3)), K33Found);
}

TEST_CASE("build_m_subdivision") {
    Graph k5 = complete_graph(5);
    auto w = find_k5_subdivision(k5);
    auto dec = decompose_by_corners(k5, w);
    CHECK_THROWS_AS(build_m_subdivision(k5, w, dec.components[0]), PreconditionError);

    Graph g4 = builtin("G4");
    w = find_k5_subdivision(g4);
    dec = decompose_by_corners(g4, w);
    for (const auto& sc : dec.components)
        if (!is_planar(sc.augmented)) {
            auto tm = build_m_subdivision(g4, w, sc);
            REQUIRE(tm);
            CHECK(validate_witness(g4, *tm));
        }
}

TEST_CASE("the genus oracle agrees on connected graphs up to 6 vertices") {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : all_graphs(n)) {
            if (!is_connected(g)) continue;
            auto v = decide_toroidal(g);
            if (v.status == ToroidalStatus::NotInClass) continue;
            CHECK(v.toroidal() == (min_genus(g) <= 1));
        }
}

TEST_CASE("the genus oracle agrees on random sums up to 10 vertices") {
    OracleOptions opt;
    opt.budget = 20'000'000;
    int compared = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Graph g = corpus::random_k33_free(seed, 10);
        auto v = decide_toroidal(g);
        try {
            CHECK_MESSAGE(v.toroidal() == (min_genus(g, opt) <= 1), to_string(g));
            ++compared;
        } catch (const BudgetExceeded&) {
        }
    }
    CHECK(compared > 150);
}

TEST_CASE("certificates replay") {
    std::string why;
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        Graph g = corpus::random_k33_free(seed, 12);
        auto v = decide_toroidal(g);
        CHECK(v.status != ToroidalStatus::NotInClass);
        CHECK_MESSAGE(validate_verdict(g, v, &why), why);
    }
    for (const auto& r : catalog()) {
        auto v = decide_toroidal(r.graph);
        CHECK_MESSAGE(validate_verdict(r.graph, v, &why), r.name << ": " << why);
        if (v.tag == CaseTag::NoValidM) {
            bool minor = false;
            for (const char* name : {"G1", "G2", "G3"}) minor = minor || has_minor(r.graph, builtin(name));
            CHECK(minor);
        }
    }
    auto bad = decide_toroidal(complete_graph(5));
    bad.tag = CaseTag::CaseII;
    CHECK_FALSE(validate_verdict(complete_graph(5), bad, &why));
}

TEST_CASE("toroidality is closed under deletion and contraction") {
    std::mt19937_64 rng(3);
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 120 && checked < 60; ++seed) {
        Graph g = corpus::random_k33_free(seed, 11);
        if (!decide_toroidal(g).toroidal() || g.size() == 0) continue;
        ++checked;
        auto es = g.edges();
        for (int k = 0; k < 4; ++k) {
            Edge e = es[rng() % es.size()];
            CHECK(decide_toroidal(delete_edge(g, e)).toroidal());
            CHECK(decide_toroidal(contract_edge(g, e)).toroidal());
        }
    }
    CHECK(checked > 10);
}

TEST_CASE("verdict JSON") {
    auto j = verdict_to_json(complete_graph(5), decide_toroidal(complete_graph(5)));
    CHECK(j["status"] == "Toroidal");
    CHECK(j["case"] == "Case-i");
    CHECK(j["witness"]["pattern"] == "K5");
    CHECK(j["components"].size() == 10);
    CHECK(j["vertices"] == 5);
    j = verdict_to_json(complete_bipartite(3, 3), decide_toroidal(complete_bipartite(3, 3)));
    CHECK(j["status"] == "NotInClass");
    CHECK(j["witness"]["paths"].size() == 9);
}
