#pragma once

#include <surjhom/poly.hpp>
#include <surjhom/reduction.hpp>

#include <optional>
#include <string>
#include <vector>

namespace surjhom {

enum class Verdict {
    TractableTransitive,
    NPCompleteNonTransitive,
    /// Irreflexive semicomplete template with more than one directed cycle.
    NPCompleteSemicomplete,
    TrivialSmall,
    EssentiallyUnaryHard,
    WNUTractableCandidate,
    Unresolved,
};

auto verdict_name(Verdict v) -> std::string;

struct ComponentPointer {
    std::size_t index;
    std::vector<Vertex> vertices;
};

struct Classification {
    Verdict verdict = Verdict::Unresolved;
    /// Median (transitive tournaments) or majority witness.
    std::optional<Polymorphism> median;
    std::optional<Polymorphism> wnu;
    /// For a non-strongly-connected tournament the chain lives on the
    /// induced subgraph of the pointed-to component, in its local numbering.
    std::optional<HardnessChain> chain;
    std::optional<ComponentPointer> component;
    std::vector<std::string> citations;
    std::vector<std::string> evidence;
};

/// Precondition: h is a reflexive tournament with at least 2 vertices.
auto classify_reflexive_tournament(const Digraph & h) -> Classification;

/// Precondition: h is a strongly connected reflexive tournament with at
/// least 3 vertices. Throws Internal if the recursion gets stuck, which
/// would contradict the existence argument it follows.
auto find_hardness_chain(const Digraph & h) -> HardnessChain;

/// Precondition: |V(h)| ≤ 3.
auto classify_small_digraph(const Digraph & h) -> Classification;

/// Re-checks every witness the classification carries.
auto verify_classification(const Digraph & h, const Classification & c) -> bool;

/// Number of directed cycles of length ≥ 2 (a double edge is a 2-cycle).
auto count_directed_cycles(const Digraph & h) -> std::size_t;

} // namespace surjhom
