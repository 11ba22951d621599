#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace torus {

// Undirected edge with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    bool has(int x) const { return u == x || v == x; }
    int other(int x) const { return x == u ? v : u; }

    auto operator<=>(const Edge&) const = default;
};

// Finite simple undirected graph on the vertices 0..order()-1.
//
// Adjacency lists are kept sorted. Mutating members exist only for building a
// graph; every algorithm in this library treats graphs as values and returns
// new graphs instead of modifying its arguments.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<std::pair<int, int>> edges);

    int order() const { return static_cast<int>(adj_.size()); }
    int size() const { return edge_count_; }

    bool has_vertex(int v) const { return v >= 0 && v < order(); }
    bool has_edge(int u, int v) const;
    bool has_edge(Edge e) const { return has_edge(e.u, e.v); }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int min_degree() const;
    int max_degree() const;
    std::vector<int> degree_sequence() const;  // non-increasing

    std::vector<Edge> edges() const;  // sorted

    int add_vertex();
    // Throws InputError on loops, parallel edges, or unknown endpoints.
    void add_edge(int u, int v);
    // Returns false instead of throwing when the edge is a loop or already present.
    bool add_edge_if_absent(int u, int v);

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
    std::vector<std::vector<int>> adj_;
    int edge_count_ = 0;
};

// A graph extracted from a host graph together with the host label of every vertex.
struct Subgraph {
    Graph graph;
    std::vector<int> host;  // host[i] is the host vertex of local vertex i

    int local(int host_vertex) const;  // -1 when absent
};

// --- basic operations -------------------------------------------------------

Graph delete_edge(const Graph& g, Edge e);
Graph delete_vertex(const Graph& g, int v);
// Merges e.v into e.u, drops the loop and merges parallel edges. Vertices above
// e.v shift down by one.
Graph contract_edge(const Graph& g, Edge e);

// Repeatedly replaces a degree-2 vertex by an edge between its neighbours, skipping
// any step that would create a parallel edge. The host map records survivors.
Subgraph suppress_degree_two(const Graph& g);

Subgraph induced_subgraph(const Graph& g, std::span<const int> vertices);
// Subgraph spanned by the given edges; its vertices are their endpoints.
Subgraph edge_subgraph(const Graph& g, std::span<const Edge> edges);

Graph relabel(const Graph& g, std::span<const int> perm);  // vertex v becomes perm[v]
Graph disjoint_union(const Graph& a, const Graph& b);
// Glues b onto a, identifying b's vertex i with a's vertex glue[i] whenever glue[i] >= 0.
Graph glue(const Graph& a, const Graph& b, std::span<const int> glue_map);

std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// Neighbourhood bitmasks, for algorithms restricted to at most 64 vertices.
std::vector<std::uint64_t> adjacency_masks(const Graph& g);

// --- common families ----------------------------------------------------------

Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph petersen_graph();
// Replaces every edge by a path with `times` interior vertices.
Graph subdivide_all(const Graph& g, int times);
Graph subdivide_edge(const Graph& g, Edge e, int times = 1);

std::string to_string(const Graph& g);  // "n m: u-v u-v ..."

}  // namespace torus
