#pragma once

#include <surjhom/digraph.hpp>

#include <optional>
#include <vector>

namespace surjhom {

struct Endomorphism {
    VertexMap map;
    bool automorphism = false;
    bool constant = false;

    auto trivial() const -> bool { return automorphism || constant; }
};

/// All endomorphisms of a digraph, in lexicographic order of their images.
struct EndoMonoid {
    std::size_t n = 0;
    std::vector<Endomorphism> elements;

    auto size() const -> std::size_t { return elements.size(); }
    auto automorphism_count() const -> std::size_t;
    auto constant_count() const -> std::size_t;
    auto nontrivial_count() const -> std::size_t;
    /// Index of f among the elements, if present.
    auto find(const VertexMap & f) const -> std::optional<std::size_t>;
};

/// Refuses when |V(h)|^|V(h)| exceeds limits().materialise.
auto endomorphisms(const Digraph & h) -> EndoMonoid;

/// Bijective homomorphism with a homomorphic inverse, checked explicitly.
auto is_automorphism(const Digraph & h, const VertexMap & f) -> bool;

struct TrivialityVerdict {
    bool holds = false;
    std::optional<VertexMap> counterexample;
};

auto is_endo_trivial(const Digraph & h) -> TrivialityVerdict;
/// A retraction here is an idempotent endomorphism (identity on its image).
auto is_retract_trivial(const Digraph & h) -> TrivialityVerdict;
auto retractions(const Digraph & h) -> std::vector<VertexMap>;

enum class FixMode {
    /// e(S) = S as a set.
    Setwise,
    /// e(s) = s for every s in S.
    Pointwise,
};

/// Every endomorphism of h fixing s is an automorphism.
auto is_pair_endo_trivial(const Digraph & h, std::span<const Vertex> s, FixMode mode = FixMode::Setwise)
    -> TrivialityVerdict;

/// Vertices are self-maps f of V(g), indexed by TupleCodec(n, n) on their
/// image vectors (full version) or by position in the EndoMonoid (restricted
/// version). (f, f') is an edge iff (f(x), f'(y)) ∈ E(g) for every (x, y) ∈ E(g).
struct SelfMapDigraph {
    Digraph digraph;
    std::vector<VertexMap> maps;
    /// Present for the endomorphism restriction.
    std::optional<EndoMonoid> monoid;
};

auto self_map_digraph(const Digraph & g) -> SelfMapDigraph;
auto endomorphism_digraph(const Digraph & g) -> SelfMapDigraph;
/// Self-map index of f under TupleCodec(n, n).
auto self_map_index(const VertexMap & f) -> std::size_t;

/// Curried view of phi : H × G → G (product indexed as in direct_product):
/// maps[x] is u ↦ phi(x, u). Throws Precondition unless phi is a homomorphism.
struct Curried {
    std::vector<VertexMap> maps;
    /// x ↦ self-map index of maps[x].
    VertexMap into_self_maps;
    /// Every maps[x] is an endomorphism of g.
    bool lands_in_endomorphisms = false;
};

auto curry(const VertexMap & phi, const Digraph & h, const Digraph & g) -> Curried;

struct HomomorphicImage {
    Digraph image;
    VertexMap quotient;
};

/// One image per set partition of V(h), in restricted-growth order.
auto homomorphic_images(const Digraph & h) -> std::vector<HomomorphicImage>;
/// Image of h under the partition whose block of v is quotient(v).
auto quotient_digraph(const Digraph & h, const VertexMap & quotient) -> Digraph;

} // namespace surjhom
