#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "torus/graph.hpp"

namespace torus {

// Cyclic order of neighbours around every vertex; determines an orientable embedding.
struct RotationSystem {
    std::vector<std::vector<int>> order;
};

struct RotationEmbedding {
    Graph graph;
    RotationSystem rotation;
    std::vector<std::vector<int>> faces;  // each face as the cyclic vertex sequence of its walk
    int genus = 0;                        // orientable genus, summed over connected components
};

// Faces by the next-edge-after rule: leaving v after arriving from u continues
// along the neighbour that follows u in v's rotation. Throws InputError when the
// rotation does not list every neighbour exactly once.
RotationEmbedding trace_faces(const Graph& g, const RotationSystem& rotation);

// Product over vertices of (deg(v) - 1)!, saturating at UINT64_MAX.
std::uint64_t rotation_space_size(const Graph& g);

struct OracleOptions {
    // Search nodes the oracle may visit before refusing with BudgetExceeded.
    std::uint64_t budget = 100'000'000;
    bool parallel = true;
};

// Exact orientable genus by exhaustive edge-insertion search over all rotation
// systems, with face-count branch and bound. Never guesses: refuses over budget.
int min_genus(const Graph& g, const OracleOptions& options = {});
inline int min_genus_bruteforce(const Graph& g, const OracleOptions& options = {}) { return min_genus(g, options); }

// A rotation system of genus at most `genus`, if one exists.
std::optional<RotationSystem> find_embedding(const Graph& g, int genus, const OracleOptions& options = {});

// Number of rotation systems of genus exactly `genus` (connected g).
std::uint64_t count_rotations_of_genus(const Graph& g, int genus, const OracleOptions& options = {});

// Every rotation system of genus exactly `genus` (connected g).
std::vector<RotationSystem> rotations_of_genus(const Graph& g, int genus, const OracleOptions& options = {});

// Genus-1 rotation systems up to graph automorphism and global orientation reversal.
std::size_t count_torus_embeddings(const Graph& g, const OracleOptions& options = {});

// One-sided randomised search by local rotation moves: can show genus <= target,
// never the converse.
std::optional<RotationSystem> random_embedding_search(const Graph& g, int target_genus, std::uint64_t seed,
                                                      std::uint64_t iterations = 2'000'000);

// "v: a b c" per line, one line per vertex.
std::string format_rotation(const RotationSystem& r);
RotationSystem parse_rotation(const std::string& text);

// Reference kernels kept for cross-checking the OpenMP versions.
namespace serial {
int min_genus(const Graph& g, std::uint64_t budget);
std::uint64_t count_rotations_of_genus(const Graph& g, int genus, std::uint64_t budget);
}  // namespace serial

namespace parallel {
int min_genus(const Graph& g, std::uint64_t budget);
std::uint64_t count_rotations_of_genus(const Graph& g, int genus, std::uint64_t budget);
}  // namespace parallel

}  // namespace torus
