#pragma once

#include <surjhom/digraph.hpp>

#include <optional>
#include <string>
#include <vector>

namespace surjhom {

/// Cyl_m: m stacked reflexive directed m-cycles. Vertex (position i, copy j)
/// is j*m + i; copy 0 is the bottom and copy m-1 the top. Besides the cycle
/// edges (i,j)->(i+1,j), each copy j < m-1 has red edges (i,j)->(i,j+1) and
/// green edges (i,j+1)->(i+1,j), positions mod m.
struct CylGadget {
    std::size_t m = 0;
    Digraph digraph;
    std::vector<Vertex> bottom;
    std::vector<Vertex> top;

    auto vertex(std::size_t position, std::size_t copy) const -> Vertex
    {
        return static_cast<Vertex>(copy * m + position);
    }
    auto copy_of(Vertex v) const -> std::size_t { return v / m; }
    auto position_of(Vertex v) const -> std::size_t { return v % m; }
};

auto build_cyl(std::size_t m) -> CylGadget;

/// Shift s when f(i) = i + s mod n for all i.
auto rotation_shift(const VertexMap & f) -> std::optional<std::size_t>;

/// Maps induced on the top copy by retractions of Cyl_m onto its bottom copy:
/// each map sends a top position to the bottom position of its image.
struct DaggerReport {
    std::size_t m = 0;
    std::vector<VertexMap> top_maps;
    /// top_maps is exactly the set of m rotations.
    bool holds = false;
};

auto verify_dagger(std::size_t m) -> DaggerReport;

struct GadgetTag {
    std::size_t id;
    std::size_t copy;
    std::size_t position;

    auto operator==(const GadgetTag &) const -> bool = default;
};

struct PathTag {
    std::size_t id;
    std::size_t position;

    auto operator==(const PathTag &) const -> bool = default;
};

/// Where an output vertex came from. Identified vertices keep every tag that
/// applies: a G-vertex carrying an embedded template vertex has both source
/// and template_vertex set.
struct Provenance {
    std::optional<Vertex> source;
    std::optional<Vertex> template_vertex;
    std::optional<GadgetTag> gadget;
    std::optional<PathTag> path;

    auto operator==(const Provenance &) const -> bool = default;
};

/// One attached copy of Cyl_m: cells[j*m + i] is the output vertex playing
/// gadget vertex (i, j).
struct GadgetPlacement {
    std::size_t m;
    std::vector<Vertex> cells;

    auto top(std::size_t position) const -> Vertex { return cells[(m - 1) * m + position]; }
    auto operator==(const GadgetPlacement &) const -> bool = default;
};

enum class Problem { Retraction, SurjectiveColouring };

auto problem_name(Problem p) -> std::string;

/// "source_problem over source_template on the input holds iff
/// target_problem over target_template on the output holds".
struct Claim {
    std::string construction;
    Problem source_problem = Problem::Retraction;
    Problem target_problem = Problem::SurjectiveColouring;
    Digraph source_template;
    Digraph target_template;

    auto operator==(const Claim &) const -> bool = default;
};

struct ReductionInstance {
    Digraph digraph;
    std::vector<Provenance> provenance;
    std::vector<GadgetPlacement> gadgets;
    Claim claim;
    /// Embedding of the target template, for retraction targets.
    std::optional<VertexMap> embedding;

    auto operator==(const ReductionInstance &) const -> bool = default;
};

/// Grows an output digraph vertex by vertex and glues gadgets onto it.
class InstanceBuilder {
public:
    auto add_vertex(Provenance p) -> Vertex;
    auto add_edge(Vertex u, Vertex v) -> void;
    auto tag(Vertex v) -> Provenance & { return _provenance[v]; }
    auto size() const -> std::size_t { return _provenance.size(); }

    /// Attaches Cyl_m with its bottom cycle identified, position by
    /// position, with bottom_cycle, and the top vertex at top_position
    /// identified with top_vertex when given. All other gadget vertices are
    /// fresh.
    auto attach_cyl(std::span<const Vertex> bottom_cycle, std::optional<Vertex> top_vertex, std::size_t top_position = 0)
        -> const GadgetPlacement &;

    auto finish(Claim claim, std::optional<VertexMap> embedding = std::nullopt) -> ReductionInstance;

private:
    std::vector<Edge> _edges;
    std::vector<Provenance> _provenance;
    std::vector<GadgetPlacement> _gadgets;
};

/// Throws Precondition unless s induces a tournament of h with Hamilton
/// cycle c (given in h's vertex numbering).
auto check_sub_cycle(const Digraph & h, std::span<const Vertex> s, const HamiltonCycle & c) -> void;

/// F(H0, HC0): h (vertices 0..|h|-1, same numbering) plus Cyl_m whose bottom
/// cycle is identified with c. m = |s|.
auto build_F(const Digraph & h, std::span<const Vertex> s, const HamiltonCycle & c) -> ReductionInstance;

struct SpillWitness {
    Vertex y;
    /// Top-copy vertex of F sent to y.
    Vertex x;
    /// Retraction of F onto h.
    VertexMap retraction;
};

struct SpillCertificate {
    std::vector<Vertex> sub;
    HamiltonCycle cycle;
    /// Sorted.
    std::vector<Vertex> spill;
    /// One per spill vertex, in spill order.
    std::vector<SpillWitness> witnesses;

    auto full(std::size_t n) const -> bool { return spill.size() == n; }
};

auto spill(const Digraph & h, std::span<const Vertex> s, const HamiltonCycle & c) -> SpillCertificate;

/// For each top position p of the gadget in F(h, s, c): the sorted values y
/// such that some retraction of F onto h sends the top vertex at p to y.
/// Their union is the spill set.
auto positional_spill(const Digraph & h, std::span<const Vertex> s, const HamiltonCycle & c)
    -> std::vector<std::vector<Vertex>>;

/// Rebuilds F and re-checks every witness and the containment of s.
auto verify_spill_certificate(const Digraph & h, const SpillCertificate & cert) -> bool;

} // namespace surjhom
