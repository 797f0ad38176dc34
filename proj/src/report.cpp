#include <surjhom/report.hpp>

namespace surjhom {

namespace {
    auto optional_map(const std::optional<VertexMap> & f) -> json
    {
        return f ? to_json(*f) : json(nullptr);
    }
}

auto to_json(const HamiltonCycle & c) -> json
{
    return json(c.order);
}

auto to_json(const Polymorphism & p) -> json
{
    return {{"arity", p.arity}, {"base", p.base}, {"table", p.table}};
}

auto to_json(const SpillCertificate & cert) -> json
{
    auto witnesses = json::array();
    for (auto & w : cert.witnesses)
        witnesses.push_back({{"y", w.y}, {"x", w.x}, {"retraction", to_json(w.retraction)}});
    return {{"sub", cert.sub}, {"cycle", to_json(cert.cycle)}, {"spill", cert.spill}, {"witnesses", witnesses}};
}

auto to_json(const HardnessChain & chain) -> json
{
    auto cycles = json::array();
    for (auto & c : chain.cycles)
        cycles.push_back(to_json(c));
    auto spills = json::array();
    for (auto & s : chain.spills)
        spills.push_back(to_json(s));
    return {{"terminal", terminal_name(chain.terminal)}, {"hosts", chain.hosts}, {"cycles", cycles},
        {"sizes", chain.sizes}, {"spills", spills}};
}

auto to_json(const Classification & c) -> json
{
    json witness = json::object();
    if (c.median)
        witness["median"] = to_json(*c.median);
    if (c.wnu)
        witness["wnu"] = to_json(*c.wnu);
    if (c.component)
        witness["component"] = {{"index", c.component->index}, {"vertices", c.component->vertices}};
    if (c.chain)
        witness["chain"] = to_json(*c.chain);
    return {{"verdict", verdict_name(c.verdict)}, {"witness", witness}, {"citations", c.citations},
        {"evidence", c.evidence}};
}

auto to_json(const Provenance & p) -> json
{
    json j = json::object();
    if (p.source)
        j["source"] = *p.source;
    if (p.template_vertex)
        j["template"] = *p.template_vertex;
    if (p.gadget)
        j["gadget"] = {{"id", p.gadget->id}, {"copy", p.gadget->copy}, {"position", p.gadget->position}};
    if (p.path)
        j["path"] = {{"id", p.path->id}, {"position", p.path->position}};
    return j;
}

auto to_json(const ReductionInstance & r) -> json
{
    auto provenance = json::array();
    for (auto & p : r.provenance)
        provenance.push_back(to_json(p));
    auto gadgets = json::array();
    for (auto & g : r.gadgets)
        gadgets.push_back({{"m", g.m}, {"cells", g.cells}});
    json claim = {
        {"construction", r.claim.construction},
        {"source_problem", problem_name(r.claim.source_problem)},
        {"target_problem", problem_name(r.claim.target_problem)},
        {"source_template", to_json(r.claim.source_template)},
        {"target_template", to_json(r.claim.target_template)},
    };
    json j = {{"digraph", to_json(r.digraph)}, {"provenance", provenance}, {"gadgets", gadgets}, {"claim", claim}};
    if (r.embedding)
        j["embedding"] = to_json(*r.embedding);
    return j;
}

auto to_json(const DaggerReport & d) -> json
{
    auto maps = json::array();
    for (auto & f : d.top_maps)
        maps.push_back(to_json(f));
    return {{"m", d.m}, {"top_maps", maps}, {"only_rotations", d.holds}};
}

auto to_json(const FigureSearch & s) -> json
{
    auto one_way = json::array();
    for (auto & c : s.one_way) {
        auto e = check_one_way(c.tournament);
        one_way.push_back({{"bits", c.bits}, {"tournament", to_json(c.tournament)},
            {"retraction_to_right", optional_map(e.retraction_to_right)}, {"retracts_to_left", e.retracts_to_left},
            {"isomorphic_endomorphism_left_to_right", optional_map(e.endomorphism_left_to_right)}});
    }
    auto full_spill = json::array();
    for (auto & c : s.full_spill) {
        auto e = check_full_spill(c.tournament);
        full_spill.push_back({{"bits", c.bits}, {"tournament", to_json(c.tournament)},
            {"retracts_to_left", e.retracts_to_left}, {"spill", to_json(e.spill)}});
    }
    return {{"one_way", one_way}, {"full_spill", full_spill}};
}

auto analyze(const Digraph & h) -> json
{
    auto monoid = endomorphisms(h);
    auto endo = is_endo_trivial(h);
    auto retract = is_retract_trivial(h);
    json j = {
        {"n", h.size()},
        {"edges", h.edge_count()},
        {"reflexive", is_reflexive(h)},
        {"irreflexive", is_irreflexive(h)},
        {"tournament", is_tournament(h)},
        {"semicomplete", is_semicomplete(h)},
        {"transitive_tournament", is_tournament(h) && is_transitive_tournament(h)},
        {"strong_components", strong_components(h).size()},
        {"endomorphisms",
            {{"total", monoid.size()}, {"automorphisms", monoid.automorphism_count()},
                {"constants", monoid.constant_count()}, {"other", monoid.nontrivial_count()}}},
        {"endo_trivial", {{"holds", endo.holds}, {"counterexample", optional_map(endo.counterexample)}}},
        {"retract_trivial", {{"holds", retract.holds}, {"counterexample", optional_map(retract.counterexample)}}},
    };
    return j;
}

auto codec_description(std::size_t base, std::size_t arity) -> json
{
    return {{"base", base}, {"arity", arity},
        {"order", "index = sum of x_i * base^(arity-1-i); the last coordinate varies fastest"}};
}

} // namespace surjhom
