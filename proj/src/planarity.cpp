#include "torus/planarity.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <iterator>

#include "torus/errors.hpp"

namespace torus {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

BoostGraph to_boost(const Graph& g) {
    BoostGraph bg(g.order());
    int index = 0;
    for (const Edge& e : g.edges()) {
        auto [d, ok] = boost::add_edge(e.u, e.v, bg);
        boost::put(boost::edge_index, bg, d, index++);
    }
    return bg;
}

// Small graphs that cannot hold a Kuratowski subgraph, or that exceed Euler's bound.
int quick_verdict(const Graph& g) {
    if (g.order() <= 4 || g.size() <= 8) return 1;
    if (g.size() > 3 * g.order() - 6) return 0;
    return -1;
}

bool boost_planar(const Graph& g, std::vector<Edge>* kuratowski) {
    BoostGraph bg = to_boost(g);
    if (!kuratowski) return boost::boyer_myrvold_planarity_test(bg);
    std::vector<BoostEdge> out;
    bool planar = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                                       boost::boyer_myrvold_params::kuratowski_subgraph =
                                                           std::back_inserter(out));
    for (const auto& d : out)
        kuratowski->emplace_back(static_cast<int>(boost::source(d, bg)), static_cast<int>(boost::target(d, bg)));
    return planar;
}

// Deletes edges while the remainder stays non-planar; what is left is a Kuratowski subgraph.
std::vector<Edge> minimise_nonplanar(const Graph& g, std::vector<Edge> edges) {
    for (std::size_t i = 0; i < edges.size();) {
        std::vector<Edge> trial = edges;
        trial.erase(trial.begin() + i);
        if (!is_planar(edge_subgraph(g, trial).graph)) edges = std::move(trial);
        else ++i;
    }
    return edges;
}

}  // namespace

bool is_planar(const Graph& g) {
    if (int q = quick_verdict(g); q >= 0) return q == 1;
    return boost_planar(g, nullptr);
}

SubdivisionWitness kuratowski_witness(const Graph& g) {
    std::vector<Edge> edges;
    if (quick_verdict(g) == 1 || boost_planar(g, &edges)) throw PreconditionError("graph is planar");
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    try {
        return witness_from_kuratowski_edges(g, edges);
    } catch (const PreconditionError&) {
        // Boost occasionally reports extra edges; shrink to an edge-minimal non-planar subgraph.
        if (edges.empty() || is_planar(edge_subgraph(g, edges).graph)) edges = g.edges();
        return witness_from_kuratowski_edges(g, minimise_nonplanar(g, std::move(edges)));
    }
}

SubdivisionWitness find_k5_subdivision(const Graph& g) {
    SubdivisionWitness w = kuratowski_witness(g);
    if (w.pattern == Pattern::K33) throw ClassViolation(std::move(w));
    return w;
}

}  // namespace torus
