#pragma once

#include <optional>
#include <vector>

#include "torus/graph.hpp"
#include "torus/planarity.hpp"
#include "torus/witness.hpp"

namespace torus {

// A bridge with three or more corners, or (for M) a bridge on two non-adjacent corners.
using K33Found = ClassViolation;

// Union of the bridges of the corner set whose corners are exactly {a, b}.
struct SideComponent {
    int a = -1, b = -1;            // host corners, a < b
    Subgraph subgraph;             // local graph with host labels
    Graph augmented;               // subgraph plus ab, same local labels
    bool has_corner_edge = false;  // ab already belongs to subgraph

    int local_a() const { return subgraph.local(a); }
    int local_b() const { return subgraph.local(b); }
};

struct SideDecomposition {
    SubdivisionWitness witness;
    std::vector<int> corner_set;             // sorted host corners
    std::vector<SideComponent> components;   // one per pattern edge, in pattern_edges order

    const SideComponent& component(int a, int b) const;  // by host corners
};

// Side components of a TK5 or TM in a 2-connected graph. Throws K33Found when a
// bridge meets three or more corners (or, for M, two non-adjacent ones).
SideDecomposition decompose_by_corners(const Graph& g, const SubdivisionWitness& w);

// ab absent from the component, the component planar, its augmentation not.
bool is_special(const SideComponent& sc);

// True iff g has no K3,3-subdivision. On false, fills `witness` when given.
bool is_k33_free(const Graph& g, SubdivisionWitness* witness = nullptr);

// A TK3,3 of g; g must contain one.
SubdivisionWitness k33_witness(const Graph& g);

// Side components keyed by the 19 edges of M; the central one is keyed by xy.
SideDecomposition m_side_components(const Graph& g, const SubdivisionWitness& w);

// The M-graph: two K5's sharing the central edge between vertices 0 and 1.
Graph m_graph();
inline constexpr int m_central_x = 0, m_central_y = 1;

}  // namespace torus
