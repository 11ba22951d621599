#pragma once

#include <string>
#include <vector>

#include "torus/graph.hpp"

namespace torus {

// Canonical relabelling by equitable partition refinement and individualisation,
// pruned with the automorphisms discovered along the way. perm[v] is the new label
// of v. Supports graphs with at most 64 vertices.
std::vector<int> canonical_labeling(const Graph& g);

// graph6 string of the canonically relabelled graph; equal iff isomorphic.
std::string canonical_form(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

// Every automorphism as a vertex permutation (identity first). Intended for small,
// moderately symmetric graphs; throws PreconditionError beyond `limit` automorphisms.
std::vector<std::vector<int>> automorphisms(const Graph& g, std::size_t limit = 1'000'000);

}  // namespace torus
