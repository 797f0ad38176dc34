#pragma once

#include <surjhom/gadget.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace surjhom {

/// Six-vertex reflexive tournament made of the 3-cycles L = 0->1->2->0 and
/// R = 3->4->5->3; bit 3*l + (r-3) of bits orients the cross pair {l, r} as
/// r->l when set and l->r otherwise.
auto cross_orientation(std::uint32_t bits) -> Digraph;

/// Retracts onto R but not onto L, and no endomorphism maps L
/// isomorphically onto R.
struct OneWayEvidence {
    std::optional<VertexMap> retraction_to_right;
    bool retracts_to_left = false;
    std::optional<VertexMap> endomorphism_left_to_right;

    auto holds() const -> bool
    {
        return retraction_to_right && ! retracts_to_left && ! endomorphism_left_to_right;
    }
};

/// Does not retract onto L, yet the spill of L with cycle (0,1,2) is all of
/// V(H).
struct FullSpillEvidence {
    bool retracts_to_left = false;
    SpillCertificate spill;

    auto holds() const -> bool { return ! retracts_to_left && spill.full(6); }
};

auto check_one_way(const Digraph & h) -> OneWayEvidence;
auto check_full_spill(const Digraph & h) -> FullSpillEvidence;

struct FigureCandidate {
    std::uint32_t bits;
    Digraph tournament;
};

/// Exhaustive over all 512 cross orientations.
struct FigureSearch {
    std::vector<FigureCandidate> one_way;
    std::vector<FigureCandidate> full_spill;
};

auto search_figure_tournaments() -> FigureSearch;

} // namespace surjhom
