#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "torus/blocks.hpp"
#include "torus/canonical.hpp"
#include "torus/enumerate.hpp"
#include "torus/errors.hpp"
#include "torus/graph.hpp"
#include "torus/graph_io.hpp"
#include "torus/minor.hpp"

using namespace torus;

namespace {

Graph random_relabel(const Graph& g, std::mt19937_64& rng) {
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return relabel(g, perm);
}

// Brute-force isomorphism over all permutations; only for tiny graphs.
bool brute_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    std::vector<int> perm(a.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (relabel(a, perm) == b) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

TEST_CASE("graph construction rejects loops, parallels and unknown endpoints") {
    Graph g(3);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(1, 0), InputError);
    CHECK_THROWS_AS(g.add_edge(2, 2), InputError);
    CHECK_THROWS_AS(g.add_edge(0, 3), InputError);
    CHECK(g.size() == 1);
}

TEST_CASE("delete_edge") {
    Graph k5 = complete_graph(5);
    Graph k5e = delete_edge(k5, Edge(0, 1));
    CHECK(k5e.order() == 5);
    CHECK(k5e.size() == 9);

    Graph tri = cycle_graph(3);
    Graph p3 = delete_edge(tri, Edge(0, 2));
    CHECK(is_isomorphic(p3, path_graph(3)));

    Graph single(2, {{0, 1}});
    Graph empty = delete_edge(single, Edge(0, 1));
    CHECK(empty.order() == 2);
    CHECK(empty.size() == 0);

    CHECK_THROWS_AS(delete_edge(p3, Edge(0, 2)), InputError);
}

TEST_CASE("contract_edge") {
    CHECK(is_isomorphic(contract_edge(complete_graph(5), Edge(1, 3)), complete_graph(4)));
    CHECK(is_isomorphic(contract_edge(cycle_graph(4), Edge(0, 1)), cycle_graph(3)));
    Graph path(3, {{0, 1}, {1, 2}});
    Graph single = contract_edge(path, Edge(0, 1));
    CHECK(single.order() == 2);
    CHECK(single.size() == 1);
    CHECK_THROWS_AS(contract_edge(path, Edge(0, 2)), InputError);
}

TEST_CASE("contraction removes exactly one vertex") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_graph(8, 0.45, trial);
        for (const Edge& e : g.edges()) {
            Graph c = contract_edge(g, e);
            CHECK(c.order() == g.order() - 1);
            CHECK(c.size() < g.size());
        }
    }
}

TEST_CASE("suppress_degree_two") {
    Graph k5 = complete_graph(5);
    Graph sub = subdivide_edge(k5, Edge(0, 1), 2);
    CHECK(sub.order() == 7);
    CHECK(is_isomorphic(suppress_degree_two(sub).graph, k5));

    Subgraph p = suppress_degree_two(path_graph(5));
    CHECK(p.graph.order() == 2);
    CHECK(p.graph.size() == 1);
    CHECK(p.host == std::vector<int>{0, 4});

    Subgraph tri = suppress_degree_two(cycle_graph(3));
    CHECK(tri.graph == cycle_graph(3));
}

TEST_CASE("suppress_degree_two is idempotent and preserves subdivisions") {
    const Graph patterns[] = {complete_graph(4), complete_graph(5), complete_bipartite(3, 3)};
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = subdivide_all(random_graph(6, 0.6, 100 + trial), trial % 2 + 1);
        if (g.order() > 40) continue;
        Graph once = suppress_degree_two(g).graph;
        CHECK(suppress_degree_two(once).graph == once);
        for (const Graph& h : patterns) CHECK(has_subdivision(g, h) == has_subdivision(once, h));
    }
}

TEST_CASE("blocks") {
    Graph bowtie(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
    auto b = blocks(bowtie);
    CHECK(b.blocks.size() == 2);
    CHECK(b.cut_vertices == std::vector<int>{2});

    auto k5 = blocks(complete_graph(5));
    CHECK(k5.blocks.size() == 1);
    CHECK(k5.cut_vertices.empty());

    auto p4 = blocks(path_graph(4));
    CHECK(p4.blocks.size() == 3);
    CHECK(p4.cut_vertices == std::vector<int>{1, 2});
}

TEST_CASE("blocks partition the edges and meet only at cut vertices") {
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_graph(10, 0.22, 500 + trial);
        auto bd = blocks(g);
        std::vector<Edge> all;
        for (const auto& blk : bd.blocks) all.insert(all.end(), blk.begin(), blk.end());
        std::sort(all.begin(), all.end());
        CHECK(all == g.edges());
        for (std::size_t i = 0; i < bd.blocks.size(); ++i)
            for (std::size_t j = i + 1; j < bd.blocks.size(); ++j) {
                auto a = bd.block_vertices(i), c = bd.block_vertices(j);
                std::vector<int> shared;
                std::set_intersection(a.begin(), a.end(), c.begin(), c.end(), std::back_inserter(shared));
                CHECK(shared.size() <= 1);
                for (int v : shared) CHECK(std::binary_search(bd.cut_vertices.begin(), bd.cut_vertices.end(), v));
            }
    }
}

TEST_CASE("bridges_of") {
    Graph k5 = complete_graph(5);
    std::vector<int> all{0, 1, 2, 3, 4};

    auto minus_one = k5.edges();
    minus_one.erase(std::find(minus_one.begin(), minus_one.end(), Edge(0, 1)));
    auto single = bridges_of(k5, all, minus_one);
    REQUIRE(single.size() == 1);
    CHECK(single[0].is_single_edge());
    CHECK(single[0].edges == std::vector<Edge>{Edge(0, 1)});

    Graph sub = subdivide_edge(k5, Edge(0, 1));  // new vertex 5 on the path 0-5-1
    auto h_edges = sub.edges();
    h_edges.erase(std::remove_if(h_edges.begin(), h_edges.end(), [](Edge e) { return e.has(5); }), h_edges.end());
    auto comp = bridges_of(sub, all, h_edges);
    REQUIRE(comp.size() == 1);
    CHECK(comp[0].internal_vertices == std::vector<int>{5});
    CHECK(comp[0].attachment_vertices == std::vector<int>{0, 1});

    CHECK(bridges_of(k5, all).size() == 10);
}

TEST_CASE("bridges partition the non-reference edges") {
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_graph(11, 0.3, 900 + trial);
        std::vector<int> ref{0, 2, 4, 6};
        std::vector<Edge> ref_edges;
        for (const Edge& e : g.edges())
            if (e.u % 2 == 0 && e.v % 2 == 0 && e.v <= 6 && (e.u + e.v) % 4 == 2) ref_edges.push_back(e);
        auto bs = bridges_of(g, ref, ref_edges);
        std::vector<Edge> covered;
        for (const auto& b : bs) covered.insert(covered.end(), b.edges.begin(), b.edges.end());
        std::sort(covered.begin(), covered.end());
        CHECK(std::adjacent_find(covered.begin(), covered.end()) == covered.end());
        std::vector<Edge> expected;
        for (const Edge& e : g.edges())
            if (!std::binary_search(ref_edges.begin(), ref_edges.end(), e)) expected.push_back(e);
        CHECK(covered == expected);
    }
}

TEST_CASE("isomorphism") {
    std::mt19937_64 rng(3);
    Graph k5 = complete_graph(5);
    CHECK(is_isomorphic(k5, random_relabel(k5, rng)));
    CHECK_FALSE(is_isomorphic(k5, delete_edge(k5, Edge(0, 1))));
    CHECK(is_isomorphic(petersen_graph(), random_relabel(petersen_graph(), rng)));
}

TEST_CASE("canonical forms of all 4-vertex graphs give 11 classes") {
    // Oracle: group all 64 labelled graphs by brute-force isomorphism.
    std::vector<Graph> labelled;
    const std::vector<Edge> slots = complete_graph(4).edges();
    for (int mask = 0; mask < 64; ++mask) {
        Graph g(4);
        for (int i = 0; i < 6; ++i)
            if (mask >> i & 1) g.add_edge(slots[i].u, slots[i].v);
        labelled.push_back(g);
    }
    std::vector<Graph> reps;
    for (const Graph& g : labelled)
        if (std::none_of(reps.begin(), reps.end(), [&](const Graph& r) { return brute_isomorphic(g, r); }))
            reps.push_back(g);
    CHECK(reps.size() == 11);

    std::set<std::string> forms;
    for (const Graph& g : labelled) forms.insert(canonical_form(g));
    CHECK(forms.size() == reps.size());
}

TEST_CASE("canonical form is invariant under relabelling") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = random_graph(3 + trial % 12, 0.1 + 0.05 * (trial % 15), trial);
        CHECK(canonical_form(g) == canonical_form(random_relabel(g, rng)));
    }
    // Highly symmetric inputs stay fast.
    CHECK(canonical_form(complete_graph(16)) == canonical_form(random_relabel(complete_graph(16), rng)));
    CHECK(canonical_form(Graph(20)) == canonical_form(Graph(20)));
}

TEST_CASE("graph counts up to isomorphism") {
    // OEIS A000088.
    const std::size_t expected[] = {1, 1, 2, 4, 11, 34, 156, 1044};
    for (int n = 0; n <= 7; ++n) CHECK(all_graphs(n).size() == expected[n]);
}

TEST_CASE("automorphism groups") {
    CHECK(automorphisms(complete_graph(5)).size() == 120);
    CHECK(automorphisms(petersen_graph()).size() == 120);
    CHECK(automorphisms(complete_bipartite(3, 3)).size() == 72);
}

TEST_CASE("has_minor") {
    CHECK_FALSE(has_minor(complete_graph(5), complete_bipartite(3, 3)));
    Graph edge(2, {{0, 1}});
    CHECK(has_minor(cycle_graph(5), edge));
    CHECK_FALSE(has_minor(Graph(6), edge));

    // Contracting the five spokes of the Petersen graph gives K5.
    Graph p = petersen_graph();
    for (int i = 4; i >= 0; --i) p = contract_edge(p, Edge(i, i + 5));
    CHECK(p == complete_graph(5));

    auto w = find_minor(petersen_graph(), complete_graph(5));
    REQUIRE(w.has_value());
    CHECK(validate_minor_witness(petersen_graph(), complete_graph(5), *w));
    CHECK_FALSE(has_minor(petersen_graph(), complete_graph(6)));
}

TEST_CASE("has_subdivision") {
    Graph k5 = complete_graph(5);
    auto w = find_subdivision(subdivide_all(k5, 1), k5, Pattern::K5);
    REQUIRE(w.has_value());
    CHECK(validate_witness(subdivide_all(k5, 1), *w));
    CHECK_FALSE(has_subdivision(k5, complete_bipartite(3, 3)));
    // Petersen has a K5 minor but no TK5 (it is cubic).
    CHECK_FALSE(has_subdivision(petersen_graph(), k5));
    CHECK(has_subdivision(petersen_graph(), complete_bipartite(3, 3)));
}

TEST_CASE("for cubic patterns, minors and subdivisions agree on all graphs up to 7 vertices") {
    Graph prism(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
    const Graph patterns[] = {complete_graph(4), complete_bipartite(3, 3), prism};
    int checked = 0;
    for (int n = 4; n <= 7; ++n)
        for (const Graph& g : all_graphs(n))
            for (const Graph& h : patterns) {
                if (h.order() > n) continue;
                auto minor = find_minor(g, h);
                auto sub = find_subdivision(g, h);
                CHECK(minor.has_value() == sub.has_value());
                if (minor) CHECK(validate_minor_witness(g, h, *minor));
                if (sub) CHECK(validate_witness(g, *sub));
                ++checked;
            }
    CHECK(checked > 3000);
}

TEST_CASE("graph6 round trip and known strings") {
    CHECK(to_graph6(complete_graph(5)) == "D~{");
    CHECK(to_graph6(petersen_graph()).size() == 9);
    CHECK(parse_graph6(">>graph6<<D~{") == complete_graph(5));
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = random_graph(trial + 1, 0.4, trial);
        CHECK(parse_graph6(to_graph6(g)) == g);
    }
    Graph big = random_graph(70, 0.1, 1);
    CHECK(to_graph6(big)[0] == '~');
    CHECK(parse_graph6(to_graph6(big)) == big);
    CHECK_THROWS_AS(parse_graph6("D~"), InputError);
    CHECK_THROWS_AS(parse_graph6("D~ {"), InputError);
}

TEST_CASE("edge-list parsing") {
    std::istringstream in("# two graphs\n3 2\n0 1\n1 2\n\n2 1\n0 1\n");
    auto gs = read_edge_lists(in);
    REQUIRE(gs.size() == 2);
    CHECK(gs[0] == path_graph(3));
    CHECK(gs[1].size() == 1);

    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), InputError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 5\n"), InputError);
    CHECK_THROWS_AS(parse_edge_list("hello"), InputError);
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 0\n"), InputError);

    std::ostringstream out;
    write_edge_list(out, complete_graph(3));
    CHECK(parse_edge_list(out.str()) == complete_graph(3));
}
