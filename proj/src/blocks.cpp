#include "torus/blocks.hpp"

#include <algorithm>

#include "torus/errors.hpp"

namespace torus {

std::vector<int> BlockDecomposition::block_vertices(std::size_t i) const {
    std::vector<int> vs;
    for (const Edge& e : blocks.at(i)) {
        vs.push_back(e.u);
        vs.push_back(e.v);
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

BlockDecomposition blocks(const Graph& g) {
    const int n = g.order();
    BlockDecomposition out;
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<char> is_cut(n, 0);
    std::vector<Edge> edge_stack;
    int timer = 0;

    struct Frame {
        int v;
        int parent;
        std::size_t next;
        int children;
    };

    for (int root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        std::vector<Frame> stack{{root, -1, 0, 0}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& nb = g.neighbors(f.v);
            if (f.next < nb.size()) {
                int w = nb[f.next++];
                if (w == f.parent) continue;
                if (disc[w] < 0) {
                    edge_stack.emplace_back(f.v, w);
                    ++f.children;
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, f.v, 0, 0});
                } else if (disc[w] < disc[f.v]) {
                    edge_stack.emplace_back(f.v, w);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
                continue;
            }
            // f.v is finished.
            Frame done = f;
            stack.pop_back();
            if (stack.empty()) break;
            int u = stack.back().v;
            low[u] = std::min(low[u], low[done.v]);
            if (low[done.v] >= disc[u]) {
                if (stack.back().parent >= 0 || stack.back().children > 1) is_cut[u] = 1;
                std::vector<Edge> block;
                const Edge tree_edge(u, done.v);
                while (true) {
                    Edge e = edge_stack.back();
                    edge_stack.pop_back();
                    block.push_back(e);
                    if (e == tree_edge) break;
                }
                std::sort(block.begin(), block.end());
                out.blocks.push_back(std::move(block));
            }
        }
    }
    for (int v = 0; v < n; ++v)
        if (is_cut[v]) out.cut_vertices.push_back(v);
    return out;
}

std::vector<BridgeOf> bridges_of(const Graph& g, std::span<const int> h_vertices, std::span<const Edge> h_edges) {
    const int n = g.order();
    std::vector<char> in_h(n, 0);
    for (int v : h_vertices) {
        if (!g.has_vertex(v)) throw InputError("reference vertex " + std::to_string(v) + " not in graph");
        in_h[v] = 1;
    }
    std::vector<Edge> h_sorted(h_edges.begin(), h_edges.end());
    std::sort(h_sorted.begin(), h_sorted.end());
    for (const Edge& e : h_sorted)
        if (!g.has_edge(e) || !in_h[e.u] || !in_h[e.v]) throw InputError("reference edge not in graph");
    auto in_h_edges = [&](Edge e) { return std::binary_search(h_sorted.begin(), h_sorted.end(), e); };

    std::vector<BridgeOf> out;
    for (const Edge& e : g.edges())
        if (in_h[e.u] && in_h[e.v] && !in_h_edges(e)) out.push_back({{e.u, e.v}, {}, {e}});

    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
        if (in_h[s] || seen[s]) continue;
        BridgeOf b;
        std::vector<int> queue{s};
        seen[s] = 1;
        for (std::size_t i = 0; i < queue.size(); ++i) {
            int v = queue[i];
            b.internal_vertices.push_back(v);
            for (int w : g.neighbors(v)) {
                if (in_h[w]) {
                    b.attachment_vertices.push_back(w);
                    b.edges.emplace_back(v, w);
                } else {
                    if (v < w) b.edges.emplace_back(v, w);
                    if (!seen[w]) {
                        seen[w] = 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        std::sort(b.internal_vertices.begin(), b.internal_vertices.end());
        std::sort(b.attachment_vertices.begin(), b.attachment_vertices.end());
        b.attachment_vertices.erase(std::unique(b.attachment_vertices.begin(), b.attachment_vertices.end()),
                                    b.attachment_vertices.end());
        std::sort(b.edges.begin(), b.edges.end());
        out.push_back(std::move(b));
    }
    return out;
}

}  // namespace torus
