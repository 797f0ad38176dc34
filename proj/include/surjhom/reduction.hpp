#pragma once

#include <surjhom/gadget.hpp>
#include <surjhom/solver.hpp>

#include <vector>

namespace surjhom {

enum class ChainTerminal { EndoTrivialDirect, BaseI, BaseII, GeneralI, GeneralII };

auto terminal_name(ChainTerminal t) -> std::string;

/// Nested vertex sets H_0 ⊂ H_1 ⊂ ... ⊂ H_last of an ambient reflexive
/// tournament H, with H_last = V(H). cycles[i] is a Hamilton cycle of H_i
/// for every host but the last (and of H itself for EndoTrivialDirect, the
/// only case with a single host). spills[i] certifies
/// Spill(H_{i+1}[H_i, HC_i]) = V(H_{i+1}) for the links the terminal case
/// relies on.
struct HardnessChain {
    std::vector<std::vector<Vertex>> hosts;
    std::vector<HamiltonCycle> cycles;
    std::vector<std::size_t> sizes;
    std::vector<SpillCertificate> spills;
    ChainTerminal terminal = ChainTerminal::EndoTrivialDirect;

    /// Index k of the last host carrying a cycle.
    auto top_level() const -> std::size_t { return cycles.size() - 1; }
};

/// G is an instance over the induced subgraph on h0 (its vertex a is the
/// a-th smallest member of h0). Output: G glued with h on the copy of H0,
/// plus Cyl_m per vertex outside H0 with bottom on c and top position 0 on
/// the vertex. Claim: G retracts to H0 iff the output maps onto h.
auto reduce_base_case_I(const RetractionInstance & g, const Digraph & h, std::span<const Vertex> h0,
    const HamiltonCycle & c) -> ReductionInstance;

/// G is an instance over h. Output: G plus Cyl_m per vertex outside the
/// embedded H0. Claim: G retracts to h iff the output maps onto h.
/// Checks that H0 and (h, H0) are endo-trivial and the spill is full.
auto reduce_base_case_II(const RetractionInstance & g, const Digraph & h, std::span<const Vertex> h0,
    const HamiltonCycle & c) -> ReductionInstance;

/// G is an instance over the induced subgraph on H_k. With one cycle
/// (k = 0) this is reduce_base_case_I.
auto reduce_general_I(const HardnessChain & chain, const Digraph & h, const RetractionInstance & g)
    -> ReductionInstance;

/// G is an instance over h. With one cycle (k = 0) this is
/// reduce_base_case_II.
auto reduce_general_II(const HardnessChain & chain, const Digraph & h, const RetractionInstance & g)
    -> ReductionInstance;

/// G' = G plus h minus its i-th strong component, earlier components
/// dominating all of G and G dominating later ones. Claim: G maps onto the
/// component iff G' maps onto h.
auto reduce_components(const Digraph & g, const Digraph & h, std::size_t i) -> ReductionInstance;

/// Joins the strong components of G (in topological order, cyclically) by
/// directed paths through |V(h)| fresh irreflexive vertices. Already strongly
/// connected inputs come back unchanged. Claim: retraction to h is preserved.
auto make_strongly_connected(const RetractionInstance & g, const Digraph & h) -> ReductionInstance;

/// One isomorphic copy i(S) of an induced subtournament S in h, found through
/// an embedding i, with i applied to the cycle of S.
struct SubCopy {
    VertexMap embedding;
    std::vector<Vertex> image;
    HamiltonCycle cycle;
    bool full_spill = false;
    bool retracts = false;
};

/// Every embedding of the subtournament on s (with cycle c) into h, in
/// embedding order, with the spill and retraction facts of each copy.
auto copies_of(const Digraph & h, std::span<const Vertex> s, const HamiltonCycle & c) -> std::vector<SubCopy>;

/// Positions of the members of sub inside the sorted host set.
auto local_indices(std::span<const Vertex> host, std::span<const Vertex> sub) -> std::vector<Vertex>;

/// Chain with the given levels H_0 ⊂ ... ⊂ H_k (ambient vertex sets, V(H)
/// itself excluded). Cycles and spill certificates are computed; throws
/// Precondition if the result does not pass verify_chain for the terminal.
auto build_chain(const Digraph & h, const std::vector<std::vector<Vertex>> & levels, ChainTerminal terminal)
    -> HardnessChain;

/// Checks the structural facts a chain records: nesting, cycles, sizes,
/// endo-triviality of H_0 and of each link pair, and each spill certificate.
auto verify_chain(const HardnessChain & chain, const Digraph & h) -> bool;

} // namespace surjhom
