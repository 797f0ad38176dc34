#pragma once

#include <surjhom/digraph.hpp>

#include <cstdint>
#include <functional>
#include <vector>

namespace surjhom {

/// Adjacency matrix as a bit string, bit u*n+v for edge (u,v). n ≤ 8.
auto adjacency_code(const Digraph & g) -> std::uint64_t;
auto from_adjacency_code(std::size_t n, std::uint64_t code) -> Digraph;

/// Least adjacency code over all relabellings; equal iff isomorphic.
auto canonical_code(const Digraph & g) -> std::uint64_t;
auto canonical_form(const Digraph & g) -> Digraph;

/// Every labelled digraph on n vertices, loops included (2^(n*n) of them).
auto for_each_labelled_digraph(std::size_t n, const std::function<void(const Digraph &)> & visit) -> void;

/// Every labelled tournament on n vertices; loops on all vertices when
/// reflexive, on none otherwise.
auto for_each_labelled_tournament(std::size_t n, bool reflexive, const std::function<void(const Digraph &)> & visit)
    -> void;

/// Isomorphism classes, each in canonical form, ordered by canonical code.
auto reflexive_tournaments(std::size_t n) -> std::vector<Digraph>;
/// reflexive = true fixes a loop on every vertex; otherwise loops are free.
auto digraphs_up_to_isomorphism(std::size_t n, bool reflexive) -> std::vector<Digraph>;

} // namespace surjhom
