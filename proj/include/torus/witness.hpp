#pragma once

#include <string>
#include <vector>

#include "torus/graph.hpp"

namespace torus {

enum class Pattern { K5, K33, M, Other };

std::string pattern_name(Pattern p);

// The pattern graph for K5, K33 (parts {0,1,2} and {3,4,5}) or the M-graph.
Graph pattern_graph(Pattern p);

// A model of a subdivision TH inside a host graph.
//
// corner_map[x] is the host vertex of pattern vertex x; branch_paths[i] is the
// host path realising pattern_edges[i], running from corner_map[u] to corner_map[v].
struct SubdivisionWitness {
    Pattern pattern = Pattern::Other;
    Graph pattern_graph;
    std::vector<Edge> pattern_edges;
    std::vector<int> corner_map;
    std::vector<std::vector<int>> branch_paths;

    std::vector<int> corners() const;          // sorted host corners
    std::vector<Edge> host_edges() const;      // sorted
    std::vector<int> host_vertices() const;    // sorted
    const std::vector<int>& path(int x, int y) const;  // branch path between pattern vertices x and y
};

// Checks every structural invariant of w against host; on failure returns false
// and, when `why` is given, a short reason.
bool validate_witness(const Graph& host, const SubdivisionWitness& w, std::string* why = nullptr);

// Reads a subdivision off an edge set that is exactly a TK5 or TK3,3 (every vertex of
// degree 2 except the corners). Throws PreconditionError otherwise.
SubdivisionWitness witness_from_kuratowski_edges(const Graph& host, const std::vector<Edge>& edges);

// Branch sets of a minor model: branch_sets[x] holds the host vertices contracted
// onto pattern vertex x.
struct MinorWitness {
    std::vector<std::vector<int>> branch_sets;
};

bool validate_minor_witness(const Graph& host, const Graph& pattern, const MinorWitness& w);

}  // namespace torus
