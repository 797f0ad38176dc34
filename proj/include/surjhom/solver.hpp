#pragma once

#include <surjhom/digraph.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace surjhom {

/// Allowed target vertices per source vertex. An empty list admits nothing.
struct ListAssignment {
    std::vector<std::vector<Vertex>> lists;
};

/// A superstructure G of H: embedding sends each H-vertex to its copy in G,
/// and G restricted to the copy is H under the embedding.
struct RetractionInstance {
    Digraph graph;
    VertexMap embedding;
};

/// Throws InvalidInput unless inst is a well-formed instance over h.
auto validate_retraction_instance(const RetractionInstance & inst, const Digraph & h) -> void;

/// Side constraints on top of edge preservation.
struct SearchConstraints {
    std::optional<ListAssignment> lists;
    /// Every target vertex is hit.
    bool vertex_surjective = false;
    /// Every non-loop target edge is the image of some source edge.
    bool edge_surjective = false;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t solutions = 0;
};

/// Backtracking with arc consistency. Branches on the least-indexed open
/// source vertex and tries target values in ascending order, so solutions are
/// reported in lexicographic order of their image vectors. Stops early when
/// visit returns false. The target may have at most 64 vertices and the
/// source at most limits().solver_vertices.
auto for_each_homomorphism(const Digraph & source, const Digraph & target, const SearchConstraints & constraints,
    const std::function<bool(const VertexMap &)> & visit) -> SearchStats;

auto first_homomorphism(const Digraph & source, const Digraph & target, const SearchConstraints & constraints = {})
    -> std::optional<VertexMap>;

auto all_homomorphisms(const Digraph & source, const Digraph & target, const SearchConstraints & constraints = {})
    -> std::vector<VertexMap>;

// The five problem variants. Each returns the lexicographically least witness.

auto find_homomorphism(const Digraph & g, const Digraph & h) -> std::optional<VertexMap>;
auto find_surjective_homomorphism(const Digraph & g, const Digraph & h) -> std::optional<VertexMap>;
auto find_retraction(const RetractionInstance & inst, const Digraph & h) -> std::optional<VertexMap>;

enum class CompactionMode {
    /// Non-loop edges of h are all images of edges of g.
    EdgeSurjective,
    /// Additionally every vertex of h is hit (differs only when h has an
    /// isolated vertex).
    Strict,
};

auto find_compaction(const Digraph & g, const Digraph & h, CompactionMode mode = CompactionMode::EdgeSurjective)
    -> std::optional<VertexMap>;
auto find_list_homomorphism(const Digraph & g, const Digraph & h, const ListAssignment & lists)
    -> std::optional<VertexMap>;

// Definition checks for witnesses.
auto is_retraction_witness(const RetractionInstance & inst, const Digraph & h, const VertexMap & f) -> bool;
auto is_compaction_witness(const Digraph & g, const Digraph & h, const VertexMap & f) -> bool;
auto respects_lists(const VertexMap & f, const ListAssignment & lists) -> bool;

/// Identity embedding of a vertex subset: the retraction instance (h, s) asks
/// whether h retracts onto its induced subgraph on s. Vertex i of the
/// subgraph is the i-th smallest member of s.
auto subset_instance(const Digraph & h, std::span<const Vertex> s) -> RetractionInstance;

/// Whether h retracts onto the induced subgraph on s (fixing s pointwise).
auto retracts_to(const Digraph & h, std::span<const Vertex> s) -> std::optional<VertexMap>;

} // namespace surjhom
