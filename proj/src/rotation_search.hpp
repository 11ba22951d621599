#pragma once

// Incremental rotation-system builder shared by the serial and OpenMP genus kernels.
//
// Edges are inserted in breadth-first order. A tree edge attaches a new vertex and
// never changes the face count; a cycle edge placed in two corners of one face
// splits it (+1 face), in corners of two different faces it merges them (-1 face).
// Every rotation system arises from exactly one sequence of corner choices, so the
// leaves of this search tree are in bijection with all rotation systems.

#include <atomic>
#include <cstdint>
#include <utility>
#include <vector>

#include "torus/genus.hpp"
#include "torus/graph.hpp"

namespace torus::detail {

class RotationSearch {
public:
    struct Step {
        int u, v;   // tree edge: u already placed, v new
        bool tree;
    };
    using Choice = std::pair<int, int>;  // darts after which the new darts go; -1 when the vertex has none

    explicit RotationSearch(const Graph& g);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(steps_.size()); }
    bool done() const { return step_ == steps_.size(); }
    std::size_t depth() const { return step_; }
    int faces() const { return faces_; }
    int remaining_cycle_edges() const { return cycle_after_[step_]; }
    // Face count needed for an embedding of the given genus.
    int faces_for_genus(int genus) const { return 2 - n_ + edge_count() - 2 * genus; }
    int genus() const { return (2 - n_ + edge_count() - faces_) / 2; }

    void choices(std::vector<Choice>& out) const;
    void apply(Choice c);
    void undo();

    RotationSystem rotation() const;

private:
    bool same_face(int du, int dv) const;
    void link_after(int d, int after, int vertex);
    void unlink(int d, int vertex);

    int n_ = 0;
    std::vector<Step> steps_;
    std::vector<int> cycle_after_;  // cycle edges at or after step i
    std::vector<int> succ_, pred_;  // rotation successor / predecessor per dart
    std::vector<int> head_;         // some dart leaving each vertex, or -1
    std::vector<int> tail_;         // tail vertex of each dart
    std::vector<int> deltas_;
    std::size_t step_ = 0;
    int faces_ = 1;
};

// Depth-first kernels over one search state; `nodes` counts visited states.
struct SearchLimits {
    std::uint64_t budget;
    std::uint64_t* nodes;
    const std::atomic<bool>* cancel = nullptr;  // polled; raises SearchCancelled once set
};

struct SearchCancelled {};

// True when some completion reaches at least `target_faces`; leaves the winning state applied.
bool search_at_least(RotationSearch& s, int target_faces, SearchLimits limits);
// Number of completions with exactly `target_faces`; optionally collects their rotations.
std::uint64_t search_exact(RotationSearch& s, int target_faces, SearchLimits limits,
                           std::vector<RotationSystem>* collect = nullptr);

// Lower bound on the genus of a connected simple graph from Euler's formula.
int euler_genus_lower_bound(const Graph& g);

}  // namespace torus::detail
