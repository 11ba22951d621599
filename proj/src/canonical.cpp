#include "torus/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "torus/errors.hpp"
#include "torus/graph_io.hpp"

namespace torus {

namespace {

using Mask = std::uint64_t;
using Cells = std::vector<std::vector<int>>;

// Splits cells by neighbour counts into each splitter cell until stable. The result
// depends only on the graph structure and the incoming ordered partition.
void refine(const std::vector<Mask>& adj, Cells& cells) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
            Mask splitter = 0;
            for (int v : cells[s]) splitter |= Mask{1} << v;
            Cells next;
            next.reserve(cells.size() + 4);
            for (auto& cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(std::move(cell));
                    continue;
                }
                std::vector<std::pair<int, int>> keyed;
                keyed.reserve(cell.size());
                for (int v : cell) keyed.emplace_back(std::popcount(adj[v] & splitter), v);
                std::sort(keyed.begin(), keyed.end());
                std::size_t start = next.size();
                next.emplace_back();
                for (std::size_t i = 0; i < keyed.size(); ++i) {
                    if (i > 0 && keyed[i].first != keyed[i - 1].first) next.emplace_back();
                    next.back().push_back(keyed[i].second);
                }
                if (next.size() - start > 1) changed = true;
            }
            cells = std::move(next);
        }
    }
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : n_(g.order()), adj_(adjacency_masks(g)) {}

    std::vector<int> run() {
        Cells cells;
        if (n_ > 0) {
            std::vector<int> all(n_);
            std::iota(all.begin(), all.end(), 0);
            cells.push_back(std::move(all));
            refine(adj_, cells);
        }
        std::vector<int> prefix;
        search(cells, prefix);
        std::vector<int> perm(n_);
        for (int i = 0; i < n_; ++i) perm[best_lab_[i]] = i;
        return perm;
    }

private:
    std::vector<Mask> certificate(const std::vector<int>& lab) const {
        std::vector<int> pos(n_);
        for (int i = 0; i < n_; ++i) pos[lab[i]] = i;
        std::vector<Mask> rows(n_, 0);
        for (int i = 0; i < n_; ++i) {
            Mask m = adj_[lab[i]];
            Mask row = 0;
            while (m) {
                int w = std::countr_zero(m);
                m &= m - 1;
                row |= Mask{1} << (n_ - 1 - pos[w]);
            }
            rows[i] = row;
        }
        return rows;
    }

    void search(const Cells& cells, std::vector<int>& prefix) {
        if (cells.size() == static_cast<std::size_t>(n_)) {
            std::vector<int> lab(n_);
            for (int i = 0; i < n_; ++i) lab[i] = cells[i][0];
            auto cert = certificate(lab);
            if (best_lab_.empty() || cert > best_cert_) {
                best_cert_ = std::move(cert);
                best_lab_ = std::move(lab);
            } else if (cert == best_cert_) {
                std::vector<int> gamma(n_);
                for (int i = 0; i < n_; ++i) gamma[best_lab_[i]] = lab[i];
                autos_.push_back(std::move(gamma));
            }
            return;
        }
        std::size_t target = 0;
        while (cells[target].size() == 1) ++target;
        std::vector<int> tried;
        for (int v : cells[target]) {
            if (!tried.empty() && equivalent_to_tried(prefix, v, tried)) continue;
            Cells next;
            next.reserve(cells.size() + 1);
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i != target) {
                    next.push_back(cells[i]);
                    continue;
                }
                next.push_back({v});
                std::vector<int> rest;
                for (int w : cells[i])
                    if (w != v) rest.push_back(w);
                next.push_back(std::move(rest));
            }
            refine(adj_, next);
            prefix.push_back(v);
            search(next, prefix);
            prefix.pop_back();
            tried.push_back(v);
        }
    }

    bool equivalent_to_tried(const std::vector<int>& prefix, int v, const std::vector<int>& tried) const {
        UnionFind uf(n_);
        bool any = false;
        for (const auto& gamma : autos_) {
            bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int p) { return gamma[p] == p; });
            if (!fixes) continue;
            any = true;
            for (int x = 0; x < n_; ++x) uf.unite(x, gamma[x]);
        }
        if (!any) return false;
        int root = uf.find(v);
        return std::any_of(tried.begin(), tried.end(), [&](int t) { return uf.find(t) == root; });
    }

    int n_;
    std::vector<Mask> adj_;
    std::vector<Mask> best_cert_;
    std::vector<int> best_lab_;
    std::vector<std::vector<int>> autos_;
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
    if (g.order() == 0) return {};
    return CanonicalSearch(g).run();
}

std::string canonical_form(const Graph& g) { return to_graph6(relabel(g, canonical_labeling(g))); }

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    if (a.degree_sequence() != b.degree_sequence()) return false;
    return canonical_form(a) == canonical_form(b);
}

std::vector<std::vector<int>> automorphisms(const Graph& g, std::size_t limit) {
    const int n = g.order();
    const auto adj = adjacency_masks(g);
    std::vector<std::vector<int>> out;
    std::vector<int> image(n, -1);
    Mask used = 0;

    auto extend = [&](auto&& self, int v) -> void {
        if (v == n) {
            if (out.size() >= limit) throw PreconditionError("automorphism group exceeds enumeration limit");
            out.push_back(image);
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used & (Mask{1} << w)) continue;
            if (g.degree(w) != g.degree(v)) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u) {
                bool e1 = adj[v] >> u & 1;
                bool e2 = adj[w] >> image[u] & 1;
                ok = e1 == e2;
            }
            if (!ok) continue;
            image[v] = w;
            used |= Mask{1} << w;
            self(self, v + 1);
            used &= ~(Mask{1} << w);
            image[v] = -1;
        }
    };
    extend(extend, 0);
    return out;
}

}  // namespace torus
