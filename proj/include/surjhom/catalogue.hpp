#pragma once

#include <surjhom/digraph.hpp>
#include <surjhom/poly.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace surjhom {

/// Named digraphs shipped with the toolkit (the "bundled:" scheme):
///   DC<k>*  reflexive directed k-cycle, k ≤ 7     DC<k>  irreflexive, 2 ≤ k ≤ 7
///   TT<k>*  reflexive transitive tournament, k ≤ 8 TT<k>  irreflexive
///   K<k>*   complete reflexive digraph, k ≤ 8
///   Hg      V{0,1,2}, E{00,22,01,10,02,20,21}
///   Hf      V{0,1,2}, E{11,22,12,01,20} (reconstructed, see README)
///   T4      DC3* plus vertex 3 with 3->1, 2->3, 0->3
///   T6-oneway, T6-fullspill  least cross orientations found by
///           search_figure_tournaments for the two six-vertex properties
/// Each entry re-checks its defining predicates when loaded.
auto bundled_digraph(std::string_view name) -> Digraph;
auto bundled_names() -> std::vector<std::string>;

/// Ternary WNU of Hg: value 0 everywhere except (1,1,1) -> 1 and (2,2,2) -> 2.
auto hg_wnu_table() -> Polymorphism;

} // namespace surjhom
