#include "torus/enumerate.hpp"

#include <random>
#include <set>
#include <string>

#include "torus/canonical.hpp"
#include "torus/errors.hpp"

namespace torus {

std::vector<Graph> all_graphs(int n) {
    if (n < 0 || n > 10) throw PreconditionError("all_graphs supports 0..10 vertices");
    std::vector<Graph> level{Graph(0)};
    for (int k = 1; k <= n; ++k) {
        std::set<std::string> seen;
        std::vector<Graph> next;
        for (const Graph& base : level)
            for (std::uint32_t subset = 0; subset < (std::uint32_t{1} << (k - 1)); ++subset) {
                Graph g = base;
                int v = g.add_vertex();
                for (int u = 0; u < k - 1; ++u)
                    if (subset >> u & 1) g.add_edge(u, v);
                if (seen.insert(canonical_form(g)).second) next.push_back(std::move(g));
            }
        level = std::move(next);
    }
    return level;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

}  // namespace torus
