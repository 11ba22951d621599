#include "torus/minor.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_set>

#include "torus/canonical.hpp"
#include "torus/errors.hpp"

namespace torus {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

std::vector<int> bits_of(Mask m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

// Spanning-subgraph embedding: an injective map f with h-edges onto g-edges, where
// |V(g)| = |V(h)|.
class SpanningEmbedding {
public:
    SpanningEmbedding(const Graph& g, const Graph& h) : g_(g), h_(h), gadj_(adjacency_masks(g)), hadj_(adjacency_masks(h)) {
        for (int v = 0; v < h.order(); ++v) order_.push_back(v);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return h.degree(a) > h.degree(b); });
        // Prefer vertices adjacent to already ordered ones.
        std::vector<int> ordered;
        Mask placed = 0;
        std::vector<char> taken(h.order(), 0);
        while (ordered.size() < order_.size()) {
            int best = -1, best_links = -1;
            for (int v : order_) {
                if (taken[v]) continue;
                int links = std::popcount(hadj_[v] & placed);
                if (links > best_links) best = v, best_links = links;
            }
            taken[best] = 1;
            placed |= bit(best);
            ordered.push_back(best);
        }
        order_ = ordered;
        image_.assign(h.order(), -1);
    }

    std::optional<std::vector<int>> run() {
        if (g_.order() != h_.order() || g_.size() < h_.size()) return std::nullopt;
        auto gd = g_.degree_sequence(), hd = h_.degree_sequence();
        for (std::size_t i = 0; i < gd.size(); ++i)
            if (gd[i] < hd[i]) return std::nullopt;
        if (extend(0)) return image_;
        return std::nullopt;
    }

private:
    bool extend(std::size_t k) {
        if (k == order_.size()) return true;
        int x = order_[k];
        for (int w = 0; w < g_.order(); ++w) {
            if (used_ & bit(w)) continue;
            if (g_.degree(w) < h_.degree(x)) continue;
            bool ok = true;
            for (std::size_t j = 0; j < k && ok; ++j) {
                int y = order_[j];
                if ((hadj_[x] & bit(y)) && !(gadj_[w] & bit(image_[y]))) ok = false;
            }
            if (!ok) continue;
            image_[x] = w;
            used_ |= bit(w);
            if (extend(k + 1)) return true;
            used_ &= ~bit(w);
            image_[x] = -1;
        }
        return false;
    }

    const Graph& g_;
    const Graph& h_;
    std::vector<Mask> gadj_, hadj_;
    std::vector<int> order_;
    std::vector<int> image_;
    Mask used_ = 0;
};

class MinorSearch {
public:
    MinorSearch(const Graph& g, const Graph& h) : h_(h), hmin_(h.min_degree()) {
        if (g.order() > 64) throw PreconditionError("minor search supports at most 64 host vertices");
        if (h.order() > 0 && hmin_ < 1) throw PreconditionError("pattern must have minimum degree at least 1");
        root_ = g;
        for (int v = 0; v < g.order(); ++v) root_sets_.push_back(bit(v));
    }

    std::optional<MinorWitness> run() {
        if (h_.order() == 0) return MinorWitness{};
        if (search(root_, root_sets_)) return witness_;
        return std::nullopt;
    }

private:
    // Applies the forced reductions that cannot lose a model of h.
    void reduce(Graph& g, std::vector<Mask>& sets) const {
        bool changed = true;
        while (changed && g.order() >= h_.order()) {
            changed = false;
            for (int v = 0; v < g.order(); ++v) {
                int d = g.degree(v);
                if (d == 0 || (d == 1 && hmin_ >= 2)) {
                    g = delete_vertex(g, v);
                    sets.erase(sets.begin() + v);
                    changed = true;
                    break;
                }
                if (d == 2 && hmin_ >= 3) {
                    int a = g.neighbors(v)[0];
                    g = contract_edge(g, Edge(a, v));
                    merge_sets(sets, a, v);
                    changed = true;
                    break;
                }
            }
        }
    }

    // Mirrors contract_edge's relabelling: the merged vertex is min(a, v) and max(a, v) is removed.
    static void merge_sets(std::vector<Mask>& sets, int a, int v) {
        int keep = std::min(a, v), drop = std::max(a, v);
        sets[keep] = sets[a] | sets[v];
        sets.erase(sets.begin() + drop);
    }

    bool search(Graph g, std::vector<Mask> sets) {
        reduce(g, sets);
        if (g.order() < h_.order() || g.size() < h_.size()) return false;
        std::string key = canonical_form(g);
        if (failed_.count(key)) return false;
        if (g.order() == h_.order()) {
            if (auto f = SpanningEmbedding(g, h_).run()) {
                witness_.branch_sets.clear();
                for (int x = 0; x < h_.order(); ++x) witness_.branch_sets.push_back(bits_of(sets[(*f)[x]]));
                return true;
            }
            failed_.insert(std::move(key));
            return false;
        }
        for (const Edge& e : g.edges()) {
            auto next = sets;
            merge_sets(next, e.u, e.v);
            if (search(contract_edge(g, e), std::move(next))) return true;
        }
        for (int v = 0; v < g.order(); ++v) {
            auto next = sets;
            next.erase(next.begin() + v);
            if (search(delete_vertex(g, v), std::move(next))) return true;
        }
        failed_.insert(std::move(key));
        return false;
    }

    const Graph& h_;
    int hmin_;
    Graph root_;
    std::vector<Mask> root_sets_;
    std::unordered_set<std::string> failed_;
    MinorWitness witness_;
};

class SubdivisionSearch {
public:
    SubdivisionSearch(const Graph& g, const Graph& h, std::span<const int> pinned)
        : g_(g), h_(h), gadj_(adjacency_masks(g)), hadj_(adjacency_masks(h)), pinned_(pinned.begin(), pinned.end()) {
        if (h.order() > 0 && h.min_degree() < 3) throw PreconditionError("pattern must have minimum degree at least 3");
        if (pinned_.empty()) pinned_.assign(h.order(), -1);
        if (static_cast<int>(pinned_.size()) != h.order()) throw PreconditionError("pinned map size mismatch");
        build_order();
        build_twin_classes();
        corner_.assign(h.order(), -1);
        pattern_edges_ = h.edges();
        paths_.assign(pattern_edges_.size(), {});
        unrouted_.assign(h.order(), 0);
        for (int x = 0; x < h.order(); ++x) unrouted_[x] = h.degree(x);
    }

    std::optional<SubdivisionWitness> run(Pattern tag) {
        if (!place(0)) return std::nullopt;
        SubdivisionWitness w;
        w.pattern = tag;
        w.pattern_graph = h_;
        w.pattern_edges = pattern_edges_;
        w.corner_map = corner_;
        w.branch_paths = paths_;
        return w;
    }

private:
    void build_order() {
        std::vector<char> taken(h_.order(), 0);
        Mask placed = 0;
        for (int x = 0; x < h_.order(); ++x)
            if (pinned_[x] >= 0) {
                order_.push_back(x);
                taken[x] = 1;
                placed |= bit(x);
            }
        while (static_cast<int>(order_.size()) < h_.order()) {
            int best = -1, best_key = -1;
            for (int x = 0; x < h_.order(); ++x) {
                if (taken[x]) continue;
                int key = std::popcount(hadj_[x] & placed) * 64 + h_.degree(x);
                if (key > best_key) best = x, best_key = key;
            }
            taken[best] = 1;
            placed |= bit(best);
            order_.push_back(best);
        }
    }

    // Pairwise-twin classes; any permutation within a class is an automorphism of h,
    // so corners in a class are placed in increasing host order.
    void build_twin_classes() {
        twin_prev_.assign(h_.order(), -1);
        std::vector<std::vector<int>> classes;
        auto twins = [&](int a, int b) { return (hadj_[a] & ~bit(b)) == (hadj_[b] & ~bit(a)); };
        for (int x : order_) {
            if (pinned_[x] >= 0) continue;
            bool joined = false;
            for (auto& cls : classes)
                if (std::all_of(cls.begin(), cls.end(), [&](int y) { return twins(x, y); })) {
                    twin_prev_[x] = cls.back();
                    cls.push_back(x);
                    joined = true;
                    break;
                }
            if (!joined) classes.push_back({x});
        }
    }

    bool degree_feasible() const {
        for (int x = 0; x < h_.order(); ++x) {
            int c = corner_[x];
            if (c < 0 || unrouted_[x] == 0) continue;
            int avail = std::popcount(gadj_[c] & ~used_);
            // Direct edges to already placed corners may still serve as branch paths.
            avail += std::popcount(gadj_[c] & corners_mask_);
            if (avail < unrouted_[x]) return false;
        }
        return true;
    }

    bool place(std::size_t k) {
        if (k == order_.size()) return true;
        int x = order_[k];
        std::vector<int> candidates;
        if (pinned_[x] >= 0) {
            if (!(used_ & bit(pinned_[x]))) candidates.push_back(pinned_[x]);
        } else {
            int lower = twin_prev_[x] >= 0 ? corner_[twin_prev_[x]] : -1;
            for (int w = lower + 1; w < g_.order(); ++w)
                if (!(used_ & bit(w)) && g_.degree(w) >= h_.degree(x)) candidates.push_back(w);
        }
        std::vector<std::size_t> to_route;
        for (std::size_t i = 0; i < pattern_edges_.size(); ++i) {
            const Edge& e = pattern_edges_[i];
            if (!e.has(x)) continue;
            int y = e.other(x);
            if (corner_[y] >= 0) to_route.push_back(i);
        }
        for (int w : candidates) {
            corner_[x] = w;
            used_ |= bit(w);
            corners_mask_ |= bit(w);
            if (degree_feasible() && route(k, to_route, 0)) return true;
            corners_mask_ &= ~bit(w);
            used_ &= ~bit(w);
            corner_[x] = -1;
        }
        return false;
    }

    bool route(std::size_t k, const std::vector<std::size_t>& edges, std::size_t i) {
        if (i == edges.size()) return place(k + 1);
        const Edge& pe = pattern_edges_[edges[i]];
        const int s = corner_[pe.u], t = corner_[pe.v];
        auto& path = paths_[edges[i]];
        --unrouted_[pe.u];
        --unrouted_[pe.v];
        bool found = false;
        // The direct edge first.
        if (gadj_[s] & bit(t)) {
            path = {s, t};
            if (degree_feasible() && route(k, edges, i + 1)) found = true;
        }
        if (!found) {
            path = {s};
            found = extend_path(k, edges, i, t);
        }
        if (!found) {
            path.clear();
            ++unrouted_[pe.u];
            ++unrouted_[pe.v];
        }
        return found;
    }

    bool reachable(int from, int target, Mask allowed) const {
        Mask seen = bit(from), frontier = bit(from);
        while (frontier) {
            Mask next = 0;
            for (int v : bits_of(frontier)) next |= gadj_[v];
            if (next & bit(target)) return true;
            next &= allowed & ~seen;
            seen |= next;
            frontier = next;
        }
        return false;
    }

    bool extend_path(std::size_t k, const std::vector<std::size_t>& edges, std::size_t i, int t) {
        auto& path = paths_[edges[i]];
        int cur = path.back();
        for (int w : bits_of(gadj_[cur] & ~used_)) {
            used_ |= bit(w);
            if (reachable(w, t, ~used_)) {
                path.push_back(w);
                if (gadj_[w] & bit(t)) {
                    path.push_back(t);
                    if (degree_feasible() && route(k, edges, i + 1)) return true;
                    path.pop_back();
                }
                if (extend_path(k, edges, i, t)) return true;
                path.pop_back();
            }
            used_ &= ~bit(w);
        }
        return false;
    }

    const Graph& g_;
    const Graph& h_;
    std::vector<Mask> gadj_, hadj_;
    std::vector<int> pinned_;
    std::vector<int> order_;
    std::vector<int> twin_prev_;
    std::vector<int> corner_;
    std::vector<Edge> pattern_edges_;
    std::vector<std::vector<int>> paths_;
    std::vector<int> unrouted_;
    Mask used_ = 0;
    Mask corners_mask_ = 0;
};

}  // namespace

std::optional<MinorWitness> find_minor(const Graph& g, const Graph& h) { return MinorSearch(g, h).run(); }

bool has_minor(const Graph& g, const Graph& h) { return find_minor(g, h).has_value(); }

std::optional<SubdivisionWitness> find_subdivision(const Graph& g, const Graph& h, Pattern tag,
                                                   std::span<const int> pinned) {
    if (g.order() > 64) throw PreconditionError("subdivision search supports at most 64 host vertices");
    if (h.order() > g.order() || h.size() > g.size()) return std::nullopt;
    return SubdivisionSearch(g, h, pinned).run(tag);
}

bool has_subdivision(const Graph& g, const Graph& h) { return find_subdivision(g, h).has_value(); }

}  // namespace torus
