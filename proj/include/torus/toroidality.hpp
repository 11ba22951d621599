#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "torus/graph.hpp"
#include "torus/structure.hpp"
#include "torus/witness.hpp"

namespace torus {

enum class ToroidalStatus { Toroidal, NonToroidal, NotInClass };

enum class CaseTag {
    AllPlanarBlocks,
    CaseI,                  // TK5, all ten augmented side components planar
    CaseII,                 // TK5, nine planar, one special
    CaseIII,                // TM, all augmented side components planar
    TwoNonplanarBlocks,
    TwoNonplanarAugmented,  // two non-planar augmented side components of the TK5
    FailedMCase,            // TM with a non-planar augmented side component
    NoValidM,               // one non-planar side component and no TM in the block
    K33Subdivision,
};

std::string status_name(ToroidalStatus s);
std::string case_name(CaseTag c);

struct ComponentReport {
    int a = -1, b = -1;  // host corners
    int vertices = 0, edges = 0;
    bool has_corner_edge = false;
    bool augmented_planar = true;
    bool special = false;
};

struct ToroidalityVerdict {
    ToroidalStatus status = ToroidalStatus::Toroidal;
    CaseTag tag = CaseTag::AllPlanarBlocks;
    // TK5 (Case-i/ii, TwoNonplanarAugmented, NoValidM), TM (Case-iii, FailedMCase)
    // or TK3,3 (NotInClass); host labels.
    std::optional<SubdivisionWitness> witness;
    std::optional<SubdivisionWitness> tk5;          // the TK5 a TM was built from
    std::vector<std::vector<int>> nonplanar_blocks;  // vertex sets
    std::vector<ComponentReport> components;         // side components of `witness`
    std::vector<std::pair<int, int>> offending;      // corner pairs of the non-planar components

    bool toroidal() const { return status == ToroidalStatus::Toroidal; }
};

ToroidalityVerdict decide_toroidal(const Graph& g);

// TM combining w with a TK5 inside the side component f, whose central path lies in f.
// Falls back to exhaustive search in g (at most 16 vertices, else BudgetExceeded).
// nullopt when g has no TM.
std::optional<SubdivisionWitness> build_m_subdivision(const Graph& g, const SubdivisionWitness& w,
                                                      const SideComponent& f);

enum class BlockKind { Planar, ToroidalNonplanar, NonToroidal };

struct AdditivityReport {
    std::vector<std::vector<int>> block_vertices;
    std::vector<BlockKind> kinds;
    bool toroidal = true;  // at most one non-planar block, and that one toroidal
};

// Per-block verdicts; throws K33Found when g is outside the class.
AdditivityReport genus_additivity_check(const Graph& g);

// Replays every claim of the certificate against g; false with a reason on mismatch.
bool validate_verdict(const Graph& g, const ToroidalityVerdict& v, std::string* why = nullptr);

nlohmann::json witness_to_json(const SubdivisionWitness& w);
nlohmann::json verdict_to_json(const Graph& g, const ToroidalityVerdict& v);

}  // namespace torus
