#pragma once

// Random graphs with no K3,3-subdivision: 0-, 1- and 2-sums of K5's and small planar
// pieces, optionally dropping the glued edge. Such sums never create a K3,3 minor.

#include <random>
#include <vector>

#include "torus/graph.hpp"
#include "torus/planarity.hpp"

namespace corpus {

inline torus::Graph planar_piece(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> size(3, 6);
    for (;;) {
        const int n = size(rng);
        torus::Graph g = torus::cycle_graph(n);
        std::bernoulli_distribution coin(0.5);
        for (int u = 0; u < n; ++u)
            for (int v = u + 2; v < n; ++v)
                if (coin(rng)) g.add_edge_if_absent(u, v);
        if (torus::is_planar(g)) return g;
    }
}

inline torus::Graph piece(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, 9);
    int k = pick(rng);
    if (k < 4) return torus::complete_graph(5);
    if (k < 5) return torus::delete_edge(torus::complete_graph(5), torus::Edge(0, 1));
    return planar_piece(rng);
}

// Glues pieces until the next one would exceed max_vertices.
inline torus::Graph random_k33_free(std::uint64_t seed, int max_vertices = 12) {
    std::mt19937_64 rng(seed);
    torus::Graph g = piece(rng);
    for (int attempt = 0; attempt < 8; ++attempt) {
        torus::Graph h = piece(rng);
        std::uniform_int_distribution<int> how(0, 9);
        const int mode = how(rng);
        const int shared = mode == 0 ? 0 : mode < 3 ? 1 : 2;
        if (g.order() + h.order() - shared > max_vertices) continue;
        std::vector<int> glue_map(h.order(), -1);
        torus::Edge target(0, 1), own(0, 1);
        if (shared == 1) {
            glue_map[std::uniform_int_distribution<int>(0, h.order() - 1)(rng)] =
                std::uniform_int_distribution<int>(0, g.order() - 1)(rng);
        } else if (shared == 2) {
            if (g.size() == 0 || h.size() == 0) continue;
            auto ge = g.edges(), he = h.edges();
            target = ge[std::uniform_int_distribution<std::size_t>(0, ge.size() - 1)(rng)];
            own = he[std::uniform_int_distribution<std::size_t>(0, he.size() - 1)(rng)];
            glue_map[own.u] = target.u;
            glue_map[own.v] = target.v;
        }
        g = torus::glue(g, h, glue_map);
        if (shared == 2 && std::bernoulli_distribution(0.4)(rng)) g = torus::delete_edge(g, target);
    }
    return g;
}

}  // namespace corpus
