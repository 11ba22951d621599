#include "rotation_search.hpp"

#include <algorithm>

#include "torus/errors.hpp"

namespace torus::detail {

RotationSearch::RotationSearch(const Graph& g) : n_(g.order()) {
    if (!is_connected(g) || n_ == 0) throw PreconditionError("rotation search needs a non-empty connected graph");
    std::vector<int> order{0}, position(n_, -1);
    position[0] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        for (int w : g.neighbors(v))
            if (position[w] < 0) {
                position[w] = static_cast<int>(order.size());
                order.push_back(w);
                steps_.push_back({v, w, true});
                // Close every cycle through w as soon as both ends are placed.
                for (int x : g.neighbors(w))
                    if (x != v && position[x] >= 0) steps_.push_back({x, w, false});
            }
    }
    cycle_after_.assign(steps_.size() + 1, 0);
    for (std::size_t i = steps_.size(); i-- > 0;) cycle_after_[i] = cycle_after_[i + 1] + (steps_[i].tree ? 0 : 1);
    const std::size_t darts = 2 * steps_.size();
    succ_.assign(darts, -1);
    pred_.assign(darts, -1);
    tail_.assign(darts, -1);
    for (std::size_t s = 0; s < steps_.size(); ++s) {
        tail_[2 * s] = steps_[s].u;
        tail_[2 * s + 1] = steps_[s].v;
    }
    head_.assign(n_, -1);
}

void RotationSearch::choices(std::vector<Choice>& out) const {
    out.clear();
    const Step& st = steps_[step_];
    auto darts_at = [&](int v, auto&& fn) {
        int start = head_[v];
        if (start < 0) return fn(-1);
        int d = start;
        do {
            fn(d);
            d = succ_[d];
        } while (d != start);
    };
    if (st.tree) {
        darts_at(st.u, [&](int du) { out.emplace_back(du, -1); });
        return;
    }
    // Face-splitting placements first: they are the ones that keep the genus low.
    std::size_t split_end = 0;
    darts_at(st.u, [&](int du) {
        darts_at(st.v, [&](int dv) {
            out.emplace_back(du, dv);
            if (same_face(du, dv)) std::swap(out[split_end++], out.back());
        });
    });
}

bool RotationSearch::same_face(int du, int dv) const {
    const int start = du ^ 1, goal = dv ^ 1;
    int d = start;
    do {
        if (d == goal) return true;
        d = succ_[d ^ 1];
    } while (d != start);
    return false;
}

void RotationSearch::link_after(int d, int after, int vertex) {
    if (after < 0) {
        succ_[d] = pred_[d] = d;
        head_[vertex] = d;
        return;
    }
    int next = succ_[after];
    succ_[after] = d;
    pred_[d] = after;
    succ_[d] = next;
    pred_[next] = d;
}

void RotationSearch::unlink(int d, int vertex) {
    if (succ_[d] == d) {
        head_[vertex] = -1;
    } else {
        int p = pred_[d], nx = succ_[d];
        succ_[p] = nx;
        pred_[nx] = p;
        if (head_[vertex] == d) head_[vertex] = nx;
    }
    succ_[d] = pred_[d] = -1;
}

void RotationSearch::apply(Choice c) {
    const Step& st = steps_[step_];
    const int nu = static_cast<int>(2 * step_), nv = nu + 1;
    int delta = 0;
    if (!st.tree) delta = same_face(c.first, c.second) ? 1 : -1;
    link_after(nu, c.first, st.u);
    link_after(nv, st.tree ? -1 : c.second, st.v);
    faces_ += delta;
    deltas_.push_back(delta);
    ++step_;
}

void RotationSearch::undo() {
    --step_;
    const Step& st = steps_[step_];
    const int nu = static_cast<int>(2 * step_), nv = nu + 1;
    unlink(nv, st.v);
    unlink(nu, st.u);
    faces_ -= deltas_.back();
    deltas_.pop_back();
}

RotationSystem RotationSearch::rotation() const {
    RotationSystem r;
    r.order.resize(n_);
    for (int v = 0; v < n_; ++v) {
        int start = head_[v];
        if (start < 0) continue;
        int d = start;
        do {
            r.order[v].push_back(tail_[d ^ 1]);
            d = succ_[d];
        } while (d != start);
    }
    return r;
}

namespace {

void count_node(const SearchLimits& limits) {
    if (++*limits.nodes > limits.budget) throw BudgetExceeded("genus oracle exceeded its search budget");
    if (limits.cancel && (*limits.nodes & 1023) == 0 && limits.cancel->load(std::memory_order_relaxed))
        throw SearchCancelled{};
}

}  // namespace

bool search_at_least(RotationSearch& s, int target_faces, SearchLimits limits) {
    if (s.faces() + s.remaining_cycle_edges() < target_faces) return false;
    if (s.done()) return true;
    std::vector<RotationSearch::Choice> cs;
    s.choices(cs);
    for (const auto& c : cs) {
        count_node(limits);
        s.apply(c);
        if (search_at_least(s, target_faces, limits)) return true;
        s.undo();
    }
    return false;
}

std::uint64_t search_exact(RotationSearch& s, int target_faces, SearchLimits limits,
                           std::vector<RotationSystem>* collect) {
    const int rem = s.remaining_cycle_edges();
    if (s.faces() + rem < target_faces || s.faces() - rem > target_faces) return 0;
    if (s.done()) {
        if (collect) collect->push_back(s.rotation());
        return 1;
    }
    std::vector<RotationSearch::Choice> cs;
    s.choices(cs);
    std::uint64_t total = 0;
    for (const auto& c : cs) {
        count_node(limits);
        s.apply(c);
        total += search_exact(s, target_faces, limits, collect);
        s.undo();
    }
    return total;
}

int euler_genus_lower_bound(const Graph& g) {
    const int v = g.order(), e = g.size();
    if (v < 3) return 0;
    int excess = e - 3 * v + 6;
    return excess <= 0 ? 0 : (excess + 5) / 6;
}

}  // namespace torus::detail
