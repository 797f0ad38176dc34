#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace surjhom {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Finite directed graph on the dense vertex set 0..n-1. Loops are explicit
/// edges (v,v); a vertex is reflexive exactly when it carries one. Immutable
/// once built. Edges are kept both as sorted out/in lists and, for graphs up
/// to dense_limit vertices, as adjacency-row bitsets.
class Digraph {
public:
    static constexpr std::size_t dense_limit = 2048;

    Digraph() = default;
    explicit Digraph(std::size_t n);
    /// Throws InvalidInput on out-of-range endpoints or a names list of the
    /// wrong length. Duplicate edges are collapsed.
    Digraph(std::size_t n, std::vector<Edge> edges, std::vector<std::string> names = {});

    auto size() const noexcept -> std::size_t { return _n; }
    auto edge_count() const noexcept -> std::size_t { return _out_targets.size(); }

    auto has_edge(Vertex u, Vertex v) const -> bool;
    auto has_loop(Vertex v) const -> bool { return has_edge(v, v); }

    auto out(Vertex u) const -> std::span<const Vertex>;
    auto in(Vertex v) const -> std::span<const Vertex>;
    auto out_degree(Vertex u) const -> std::size_t { return out(u).size(); }
    auto in_degree(Vertex v) const -> std::size_t { return in(v).size(); }

    /// Adjacency row of u as 64-bit words; empty when the graph is too large
    /// for the dense view.
    auto row(Vertex u) const -> std::span<const std::uint64_t>;
    auto has_dense_rows() const noexcept -> bool { return ! _rows.empty() || _n == 0; }

    /// All edges in lexicographic order.
    auto edges() const -> std::vector<Edge>;

    auto names() const -> const std::vector<std::string> & { return _names; }
    auto has_names() const noexcept -> bool { return ! _names.empty(); }
    auto name(Vertex v) const -> std::string;
    auto with_names(std::vector<std::string> names) const -> Digraph;

    /// Same vertex count and edge set; names ignored.
    auto same_structure(const Digraph & other) const -> bool;
    auto operator==(const Digraph & other) const -> bool;

private:
    std::size_t _n = 0;
    std::vector<std::size_t> _out_offsets{0}, _in_offsets{0};
    std::vector<Vertex> _out_targets, _in_sources;
    std::size_t _words_per_row = 0;
    std::vector<std::uint64_t> _rows;
    std::vector<std::string> _names;
};

/// Total function between vertex sets.
struct VertexMap {
    std::size_t codomain_size = 0;
    std::vector<Vertex> image;

    VertexMap() = default;
    VertexMap(std::size_t codomain, std::vector<Vertex> img);

    static auto identity(std::size_t n) -> VertexMap;
    static auto constant(std::size_t domain, Vertex value, std::size_t codomain) -> VertexMap;

    auto domain_size() const noexcept -> std::size_t { return image.size(); }
    auto operator()(Vertex v) const -> Vertex { return image[v]; }

    auto is_injective() const -> bool;
    auto is_surjective() const -> bool;
    auto is_bijective() const -> bool { return domain_size() == codomain_size && is_injective(); }
    auto is_constant() const -> bool;
    auto is_identity() const -> bool;
    /// Sorted distinct image values.
    auto image_set() const -> std::vector<Vertex>;

    auto operator==(const VertexMap &) const -> bool = default;
    auto operator<=>(const VertexMap &) const = default;
};

/// outer ∘ inner. Throws InvalidInput unless inner's codomain is outer's domain.
auto compose(const VertexMap & outer, const VertexMap & inner) -> VertexMap;
/// Inverse of a bijection.
auto inverse(const VertexMap & f) -> VertexMap;

auto is_homomorphism(const Digraph & from, const Digraph & to, const VertexMap & f) -> bool;
/// Bijective homomorphism whose inverse is a homomorphism.
auto is_isomorphism(const Digraph & from, const Digraph & to, const VertexMap & f) -> bool;

struct HamiltonCycle {
    std::vector<Vertex> order;

    auto size() const noexcept -> std::size_t { return order.size(); }
    auto operator==(const HamiltonCycle &) const -> bool = default;
};

auto is_hamilton_cycle(const Digraph & h, const HamiltonCycle & c) -> bool;

// Structural predicates. Tournament and semicomplete look only at non-loop
// edges; reflexivity is a separate question.
auto is_reflexive(const Digraph & h) -> bool;
auto is_irreflexive(const Digraph & h) -> bool;
auto is_tournament(const Digraph & h) -> bool;
auto is_semicomplete(const Digraph & h) -> bool;
auto has_double_edge(const Digraph & h) -> bool;
auto is_reflexive_tournament(const Digraph & h) -> bool;
/// Precondition: h is a tournament.
auto is_transitive_tournament(const Digraph & h) -> bool;
auto is_strongly_connected(const Digraph & g) -> bool;
auto is_weakly_connected(const Digraph & g) -> bool;

/// Strongly connected components in a topological order of the condensation
/// (sources first; ties broken by least member). Each component is sorted.
/// For a tournament this is the standard order: earlier components dominate
/// later ones.
auto strong_components(const Digraph & g) -> std::vector<std::vector<Vertex>>;

/// Lexicographically least Hamilton cycle starting at vertex 0. Precondition:
/// h is a strongly connected tournament.
auto hamilton_cycle(const Digraph & h) -> HamiltonCycle;

/// Mixed-radix codec for V(H)^k: tuple (x_1,...,x_k) is stored at
/// ((x_1 * n + x_2) * n + ...) * n + x_k, so the last coordinate varies fastest.
class TupleCodec {
public:
    TupleCodec(std::size_t base, std::size_t arity);

    auto base() const noexcept -> std::size_t { return _base; }
    auto arity() const noexcept -> std::size_t { return _arity; }
    auto count() const noexcept -> std::size_t { return _count; }
    auto encode(std::span<const Vertex> tuple) const -> std::size_t;
    auto decode(std::size_t index) const -> std::vector<Vertex>;
    auto coordinate(std::size_t index, std::size_t i) const -> Vertex;

private:
    std::size_t _base, _arity, _count;
};

/// H^k under TupleCodec(|V(H)|, k). Throws SizeBound past limits().materialise.
auto direct_power(const Digraph & h, std::size_t k) -> Digraph;
/// A × B with (a,b) at a * |V(B)| + b.
auto direct_product(const Digraph & a, const Digraph & b) -> Digraph;

/// Induced subgraph on the sorted members of s; vertex i of the result is the
/// i-th smallest member of s.
auto induced_subgraph(const Digraph & h, std::span<const Vertex> s) -> Digraph;

struct PartVertex {
    std::size_t part;
    Vertex vertex;

    auto operator==(const PartVertex &) const -> bool = default;
    auto operator<=>(const PartVertex &) const = default;
};

struct GluedUnion {
    Digraph digraph;
    /// Output vertex of each (part, vertex).
    std::vector<std::vector<Vertex>> slot;
    /// Every (part, vertex) merged into each output vertex, in part order.
    std::vector<std::vector<PartVertex>> origins;
};

/// Disjoint union of parts with the listed pairs identified. Output vertices
/// are numbered parts-in-order, vertices-in-order; an identified vertex takes
/// the earliest slot of its class. Identifying two distinct vertices of the
/// same part is inconsistent and throws InvalidInput.
auto glue(std::span<const Digraph> parts, std::span<const std::pair<PartVertex, PartVertex>> identify) -> GluedUnion;

/// Calls visit with each injective map V(pattern) -> V(host) that is an
/// isomorphism onto the induced subgraph of its image. Stops when visit
/// returns false.
auto for_each_embedding(const Digraph & pattern, const Digraph & host,
    const std::function<bool(const std::vector<Vertex> &)> & visit) -> void;
auto find_isomorphism(const Digraph & a, const Digraph & b) -> std::optional<VertexMap>;
auto are_isomorphic(const Digraph & a, const Digraph & b) -> bool;

// Small named digraphs. Starred names carry loops on every vertex.
auto directed_cycle(std::size_t k, bool reflexive) -> Digraph;
auto transitive_tournament(std::size_t k, bool reflexive) -> Digraph;
auto complete_digraph(std::size_t k, bool reflexive) -> Digraph;
auto with_all_loops(const Digraph & g) -> Digraph;

} // namespace surjhom
