#pragma once

#include <stdexcept>
#include <string>

#include "torus/graph.hpp"
#include "torus/witness.hpp"

namespace torus {

// Raised when a graph turns out to contain a K3,3-subdivision where the toroidality
// machinery requires it not to. Always carries a validated TK3,3.
class ClassViolation : public std::runtime_error {
public:
    explicit ClassViolation(SubdivisionWitness w)
        : std::runtime_error("graph contains a K3,3-subdivision"), witness(std::move(w)) {}
    SubdivisionWitness witness;
};

bool is_planar(const Graph& g);

// A TK5 or TK3,3 inside a non-planar graph. Throws PreconditionError on planar input.
SubdivisionWitness kuratowski_witness(const Graph& g);

// A TK5 inside a non-planar graph with no K3,3-subdivision. Throws ClassViolation with
// the TK3,3 when extraction produces one, PreconditionError when g is planar.
SubdivisionWitness find_k5_subdivision(const Graph& g);

}  // namespace torus
