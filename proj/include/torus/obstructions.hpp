#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "torus/graph.hpp"
#include "torus/toroidality.hpp"

namespace torus {

enum class ObstructionKind { MinorOrder, TopologicalOnly, Reference };

std::string kind_name(ObstructionKind k);

struct ObstructionRecord {
    std::string name;
    Graph graph;
    ObstructionKind kind;
};

// G1..G11, K5, K33 or M. Throws InputError for anything else.
Graph builtin(const std::string& name);

// G1..G11 in order, checked at load time (minimum degree 3, no TK3,3).
const std::vector<ObstructionRecord>& catalog();

// Parses the catalog format: graph6 lines plus a manifest of "name kind" lines in the
// same order. Kinds are minor-order, topological-only, reference.
std::vector<ObstructionRecord> parse_catalog(const std::string& graph6_text, const std::string& manifest_text);

struct EdgeOutcome {
    Edge edge;
    ToroidalStatus status;
    CaseTag tag;
};

struct ObstructionReport {
    bool min_degree_ok = false;
    ToroidalStatus status = ToroidalStatus::Toroidal;
    CaseTag tag = CaseTag::AllPlanarBlocks;
    std::vector<EdgeOutcome> deletions, contractions;
    bool nontoroidal = false;
    bool deletion_clause = false;     // every g - e toroidal
    bool contraction_clause = false;  // every g / e toroidal
    bool in_class = true;             // no NotInClass anywhere
    bool passed = false;
    std::string failure;  // first failed clause, empty on success
};

// Minimum degree 3, non-toroidal, and every single-edge deletion and contraction toroidal.
ObstructionReport verify_minor_obstruction(const Graph& g);
// As above without the contraction clause (still reported).
ObstructionReport verify_topological_obstruction(const Graph& g);

nlohmann::json report_to_json(const ObstructionReport& r);

// Vertex v keeps `keep`, a new last vertex takes `move`, and the two are joined.
struct SplitOperation {
    int vertex;
    std::vector<int> keep, move;
};

Graph apply_split(const Graph& g, const SplitOperation& s);
// Every split with both parts of size at least 2, each unordered partition once.
std::vector<SplitOperation> all_splits(const Graph& g);

struct SplitOptions {
    int max_vertices = 16;
    bool parallel = true;
};

// Breadth-first closure of the seeds under splits, moving through non-toroidal
// K3,3-free graphs; returns those passing verify_topological_obstruction, one per
// isomorphism class, ordered by (order, size, canonical form).
std::vector<Graph> enumerate_splits(const std::vector<Graph>& seeds, const SplitOptions& options = {});

}  // namespace torus
