#include "torus/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "torus/errors.hpp"

namespace torus {

Graph::Graph(int n) {
    if (n < 0) throw InputError("negative vertex count");
    adj_.resize(n);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (const Edge& e : edges) add_edge(e.u, e.v);
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

bool Graph::has_edge(int u, int v) const {
    if (!has_vertex(u) || !has_vertex(v)) return false;
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int target = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), target);
}

int Graph::min_degree() const {
    int d = order() == 0 ? 0 : degree(0);
    for (int v = 1; v < order(); ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < order(); ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> seq(order());
    for (int v = 0; v < order(); ++v) seq[v] = degree(v);
    std::sort(seq.rbegin(), seq.rend());
    return seq;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 0; u < order(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

int Graph::add_vertex() {
    adj_.emplace_back();
    return order() - 1;
}

void Graph::add_edge(int u, int v) {
    if (!has_vertex(u) || !has_vertex(v))
        throw InputError("edge " + std::to_string(u) + "-" + std::to_string(v) + " has an undeclared endpoint");
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (!add_edge_if_absent(u, v))
        throw InputError("parallel edge " + std::to_string(u) + "-" + std::to_string(v));
}

bool Graph::add_edge_if_absent(int u, int v) {
    if (u == v || has_edge(u, v)) return false;
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++edge_count_;
    return true;
}

int Subgraph::local(int host_vertex) const {
    auto it = std::find(host.begin(), host.end(), host_vertex);
    return it == host.end() ? -1 : static_cast<int>(it - host.begin());
}

Graph delete_edge(const Graph& g, Edge e) {
    if (!g.has_edge(e)) throw InputError("no edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    Graph out(g.order());
    for (const Edge& f : g.edges())
        if (f != e) out.add_edge(f.u, f.v);
    return out;
}

Graph delete_vertex(const Graph& g, int v) {
    if (!g.has_vertex(v)) throw InputError("no vertex " + std::to_string(v));
    Graph out(g.order() - 1);
    auto shift = [v](int x) { return x > v ? x - 1 : x; };
    for (const Edge& f : g.edges())
        if (!f.has(v)) out.add_edge(shift(f.u), shift(f.v));
    return out;
}

Graph contract_edge(const Graph& g, Edge e) {
    if (!g.has_edge(e)) throw InputError("no edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    Graph out(g.order() - 1);
    auto map = [&](int x) {
        if (x == e.v) x = e.u;
        return x > e.v ? x - 1 : x;
    };
    for (const Edge& f : g.edges()) out.add_edge_if_absent(map(f.u), map(f.v));
    return out;
}

Subgraph suppress_degree_two(const Graph& g) {
    // Work on mutable adjacency sets, then compact.
    const int n = g.order();
    std::vector<std::vector<int>> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
    std::vector<char> alive(n, 1);
    auto connected = [&](int a, int b) { return std::binary_search(adj[a].begin(), adj[a].end(), b); };
    auto erase = [&](int a, int b) { adj[a].erase(std::lower_bound(adj[a].begin(), adj[a].end(), b)); };
    auto insert = [&](int a, int b) { adj[a].insert(std::lower_bound(adj[a].begin(), adj[a].end(), b), b); };

    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            if (!alive[v] || adj[v].size() != 2) continue;
            int a = adj[v][0], b = adj[v][1];
            if (connected(a, b)) continue;  // would create a parallel edge
            erase(a, v);
            erase(b, v);
            insert(a, b);
            insert(b, a);
            adj[v].clear();
            alive[v] = 0;
            changed = true;
        }
    }

    Subgraph out;
    std::vector<int> index(n, -1);
    for (int v = 0; v < n; ++v)
        if (alive[v]) {
            index[v] = static_cast<int>(out.host.size());
            out.host.push_back(v);
        }
    out.graph = Graph(static_cast<int>(out.host.size()));
    for (int v = 0; v < n; ++v)
        for (int w : adj[v])
            if (v < w) out.graph.add_edge(index[v], index[w]);
    return out;
}

Subgraph induced_subgraph(const Graph& g, std::span<const int> vertices) {
    Subgraph out;
    out.host.assign(vertices.begin(), vertices.end());
    std::vector<int> index(g.order(), -1);
    for (std::size_t i = 0; i < out.host.size(); ++i) {
        int v = out.host[i];
        if (!g.has_vertex(v)) throw InputError("no vertex " + std::to_string(v));
        if (index[v] >= 0) throw InputError("duplicate vertex " + std::to_string(v));
        index[v] = static_cast<int>(i);
    }
    out.graph = Graph(static_cast<int>(out.host.size()));
    for (std::size_t i = 0; i < out.host.size(); ++i)
        for (int w : g.neighbors(out.host[i]))
            if (index[w] > static_cast<int>(i)) out.graph.add_edge(static_cast<int>(i), index[w]);
    return out;
}

Subgraph edge_subgraph(const Graph& g, std::span<const Edge> edges) {
    Subgraph out;
    std::vector<int> index(g.order(), -1);
    for (const Edge& e : edges) {
        if (!g.has_edge(e)) throw InputError("no edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
        for (int x : {e.u, e.v})
            if (index[x] < 0) {
                index[x] = 0;
                out.host.push_back(x);
            }
    }
    std::sort(out.host.begin(), out.host.end());
    for (std::size_t i = 0; i < out.host.size(); ++i) index[out.host[i]] = static_cast<int>(i);
    out.graph = Graph(static_cast<int>(out.host.size()));
    for (const Edge& e : edges) out.graph.add_edge_if_absent(index[e.u], index[e.v]);
    return out;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
    if (static_cast<int>(perm.size()) != g.order()) throw InputError("permutation size mismatch");
    Graph out(g.order());
    for (const Edge& e : g.edges()) out.add_edge(perm[e.u], perm[e.v]);
    return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph out(a.order() + b.order());
    for (const Edge& e : a.edges()) out.add_edge(e.u, e.v);
    for (const Edge& e : b.edges()) out.add_edge(e.u + a.order(), e.v + a.order());
    return out;
}

Graph glue(const Graph& a, const Graph& b, std::span<const int> glue_map) {
    if (static_cast<int>(glue_map.size()) != b.order()) throw InputError("glue map size mismatch");
    Graph out = a;
    std::vector<int> to(b.order());
    for (int i = 0; i < b.order(); ++i) to[i] = glue_map[i] >= 0 ? glue_map[i] : out.add_vertex();
    for (const Edge& e : b.edges()) out.add_edge_if_absent(to[e.u], to[e.v]);
    return out;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.order(), 0);
    for (int s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp{s};
        seen[s] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (int w : g.neighbors(comp[i]))
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
    if (g.order() > 64) throw PreconditionError("bitmask algorithms support at most 64 vertices");
    std::vector<std::uint64_t> m(g.order(), 0);
    for (int v = 0; v < g.order(); ++v)
        for (int w : g.neighbors(v)) m[v] |= std::uint64_t{1} << w;
    return m;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

Graph cycle_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph petersen_graph() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

Graph subdivide_edge(const Graph& g, Edge e, int times) {
    Graph out = delete_edge(g, e);
    int prev = e.u;
    for (int i = 0; i < times; ++i) {
        int w = out.add_vertex();
        out.add_edge(prev, w);
        prev = w;
    }
    out.add_edge(prev, e.v);
    return out;
}

Graph subdivide_all(const Graph& g, int times) {
    Graph out(g.order());
    for (const Edge& e : g.edges()) {
        int prev = e.u;
        for (int i = 0; i < times; ++i) {
            int w = out.add_vertex();
            out.add_edge(prev, w);
            prev = w;
        }
        out.add_edge(prev, e.v);
    }
    return out;
}

std::string to_string(const Graph& g) {
    std::ostringstream os;
    os << g.order() << ' ' << g.size() << ':';
    for (const Edge& e : g.edges()) os << ' ' << e.u << '-' << e.v;
    return os.str();
}

}  // namespace torus
