#pragma once

#include <surjhom/digraph.hpp>

#include <functional>
#include <optional>
#include <vector>

namespace surjhom {

/// k-ary operation on V(H); table[i] is its value on the tuple
/// TupleCodec(base, arity).decode(i).
struct Polymorphism {
    std::size_t arity = 0;
    std::size_t base = 0;
    std::vector<Vertex> table;

    auto codec() const -> TupleCodec { return TupleCodec(base, arity); }
    auto operator()(std::span<const Vertex> args) const -> Vertex { return table[codec().encode(args)]; }
    auto is_idempotent() const -> bool;

    auto operator==(const Polymorphism &) const -> bool = default;
};

auto projection(std::size_t base, std::size_t arity, std::size_t coordinate) -> Polymorphism;

/// Homomorphism from H^k to H. Throws InvalidInput on a malformed table.
auto is_polymorphism(const Digraph & h, const Polymorphism & p) -> bool;

/// Every k-ary polymorphism, in lexicographic order of tables. Refuses k above
/// limits().max_arity and powers past limits().materialise.
auto for_each_polymorphism(const Digraph & h, std::size_t k, const std::function<bool(const Polymorphism &)> & visit)
    -> void;
auto enumerate_polymorphisms(const Digraph & h, std::size_t k) -> std::vector<Polymorphism>;

struct UnaryWitness {
    std::size_t coordinate;
    VertexMap g;
};

/// p(x_1..x_k) = g(x_i) for the least such i.
auto essentially_unary(const Polymorphism & p) -> std::optional<UnaryWitness>;

struct UnarityVerdict {
    bool holds = true;
    std::size_t count = 0;
    std::optional<Polymorphism> counterexample;
};

auto all_polymorphisms_essentially_unary(const Digraph & h, std::size_t k) -> UnarityVerdict;

/// Idempotent and t(y,x,..,x) = t(x,y,x,..,x) = .. = t(x,..,x,y).
auto is_wnu(const Polymorphism & p) -> bool;
/// Ternary with m(x,x,y) = m(x,y,x) = m(y,x,x) = x.
auto is_majority(const Polymorphism & p) -> bool;

/// Lexicographically least k-ary WNU polymorphism, k ≥ 2.
auto find_wnu(const Digraph & h, std::size_t k) -> std::optional<Polymorphism>;

enum class MajorityKind { Median, Search };

struct MajorityResult {
    Polymorphism operation;
    MajorityKind kind;
};

/// Median under the induced linear order for a transitive reflexive
/// tournament; otherwise the least majority polymorphism found by search.
auto find_majority_median(const Digraph & h) -> std::optional<MajorityResult>;

/// For a transitive tournament: vertices from the one beating all others to
/// the one beaten by all.
auto linear_order(const Digraph & h) -> std::vector<Vertex>;

} // namespace surjhom
