#include <surjhom/endo.hpp>
#include <surjhom/error.hpp>
#include <surjhom/reduction.hpp>

#include <algorithm>
#include <map>
#include <numeric>

namespace surjhom {

using std::size_t;
using std::vector;

namespace {
    auto sorted_unique(std::span<const Vertex> s) -> vector<Vertex>
    {
        vector<Vertex> v(s.begin(), s.end());
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    }

    auto all_vertices(size_t n) -> vector<Vertex>
    {
        vector<Vertex> v(n);
        std::iota(v.begin(), v.end(), Vertex{0});
        return v;
    }

    auto contains(const vector<Vertex> & sorted, Vertex v) -> bool
    {
        return std::binary_search(sorted.begin(), sorted.end(), v);
    }

    auto require_reflexive_tournament(const Digraph & h) -> void
    {
        if (! is_reflexive_tournament(h))
            precondition_failed("template must be a reflexive tournament");
    }

    // Cycle and subset expressed in the host's local numbering.
    auto localise(std::span<const Vertex> host, const HamiltonCycle & c) -> HamiltonCycle
    {
        return HamiltonCycle{local_indices(host, c.order)};
    }

    auto tag_instance_vertices(InstanceBuilder & b, const RetractionInstance & g, std::span<const Vertex> template_of)
        -> void
    {
        for (Vertex u = 0; u < g.graph.size(); ++u)
            b.add_vertex(Provenance{u, std::nullopt, std::nullopt, std::nullopt});
        for (Vertex a = 0; a < g.embedding.domain_size(); ++a)
            b.tag(g.embedding(a)).template_vertex = template_of[a];
        for (auto & [u, v] : g.graph.edges())
            b.add_edge(u, v);
    }

    auto mapped(const vector<Vertex> & slot, std::span<const Vertex> vs) -> vector<Vertex>
    {
        vector<Vertex> out;
        for (auto v : vs)
            out.push_back(slot[v]);
        return out;
    }

    // Picks the top position at which each gadget meets its vertex: one
    // whose positional spill (into the target h) contains every value the
    // vertex can take in the forward direction of the reduction.
    class TopPlacer {
    public:
        explicit TopPlacer(const Digraph & h) : _h(h) {}

        auto position(const HamiltonCycle & c, std::span<const Vertex> values) -> size_t
        {
            auto it = _spills.find(c.order);
            if (it == _spills.end())
                it = _spills.emplace(c.order, positional_spill(_h, c.order, c)).first;
            auto & per_position = it->second;
            vector<Vertex> wanted = sorted_unique(values);
            for (size_t p = 0; p < per_position.size(); ++p)
                if (std::includes(per_position[p].begin(), per_position[p].end(), wanted.begin(), wanted.end()))
                    return p;
            precondition_failed("no top position of the gadget on a " + std::to_string(c.size())
                + "-cycle reaches every value its vertex may take");
        }

    private:
        const Digraph & _h;
        std::map<vector<Vertex>, vector<vector<Vertex>>> _spills;
    };

    // Layered construction shared by Base Case I and General Case I: levels
    // are H_0 .. H_k, g is an instance over H_k.
    auto general_I(const Digraph & h, const vector<vector<Vertex>> & levels, const vector<HamiltonCycle> & cycles,
        const RetractionInstance & g, std::string name) -> ReductionInstance
    {
        auto & top = levels.back();
        auto sub = induced_subgraph(h, top);
        validate_retraction_instance(g, sub);

        InstanceBuilder b;
        tag_instance_vertices(b, g, top);
        vector<Vertex> slot(h.size());
        for (size_t a = 0; a < top.size(); ++a)
            slot[top[a]] = g.embedding(static_cast<Vertex>(a));
        for (Vertex v = 0; v < h.size(); ++v)
            if (! contains(top, v))
                slot[v] = b.add_vertex(Provenance{std::nullopt, v, std::nullopt, std::nullopt});
        for (auto & [u, v] : h.edges())
            if (! (contains(top, u) && contains(top, v)))
                b.add_edge(slot[u], slot[v]);

        TopPlacer placer(h);
        auto glued = b.size();
        auto bottom_k = mapped(slot, cycles.back().order);
        auto copy_of_top = mapped(slot, top);
        std::sort(copy_of_top.begin(), copy_of_top.end());
        for (Vertex v = 0; v < glued; ++v) {
            if (contains(copy_of_top, v))
                continue;
            // Template vertices keep their value; instance vertices land in H_k.
            auto t = b.tag(v).template_vertex;
            auto p = t ? placer.position(cycles.back(), std::span<const Vertex>(&*t, 1))
                       : placer.position(cycles.back(), top);
            b.attach_cyl(bottom_k, v, p);
        }
        // Chain gadgets for the lower links; the link above H_k would repeat
        // the gadgets just attached.
        for (size_t i = 1; i < levels.size(); ++i) {
            auto bottom = mapped(slot, cycles[i - 1].order);
            for (auto v : levels[i])
                if (! contains(levels[i - 1], v))
                    b.attach_cyl(bottom, slot[v], placer.position(cycles[i - 1], std::span<const Vertex>(&v, 1)));
        }

        Claim claim;
        claim.construction = std::move(name);
        claim.source_problem = Problem::Retraction;
        claim.target_problem = Problem::SurjectiveColouring;
        claim.source_template = sub;
        claim.target_template = h;
        return b.finish(std::move(claim));
    }

    // Shared by Base Case II and General Case II: levels are H_0 .. H_k, g is
    // an instance over h = H_{k+1}.
    auto general_II(const Digraph & h, const vector<vector<Vertex>> & levels, const vector<HamiltonCycle> & cycles,
        const RetractionInstance & g, std::string name) -> ReductionInstance
    {
        validate_retraction_instance(g, h);
        InstanceBuilder b;
        tag_instance_vertices(b, g, all_vertices(h.size()));
        vector<Vertex> slot(h.size());
        for (Vertex v = 0; v < h.size(); ++v)
            slot[v] = g.embedding(v);

        // Level of each template vertex: least i with v in H_i (H_{k+1} = V(h)).
        auto level_of = [&](Vertex v) {
            for (size_t i = 0; i < levels.size(); ++i)
                if (contains(levels[i], v))
                    return i;
            return levels.size();
        };
        vector<std::optional<Vertex>> template_at(g.graph.size());
        for (Vertex v = 0; v < h.size(); ++v)
            template_at[slot[v]] = v;

        TopPlacer placer(h);
        auto everything = all_vertices(h.size());
        for (Vertex u = 0; u < g.graph.size(); ++u) {
            size_t link;
            vector<Vertex> values;
            if (template_at[u]) {
                auto level = level_of(*template_at[u]);
                if (level == 0)
                    continue;
                link = level - 1;
                values = {*template_at[u]};
            }
            else {
                link = levels.size() - 1;
                values = everything;
            }
            b.attach_cyl(mapped(slot, cycles[link].order), u, placer.position(cycles[link], values));
        }

        Claim claim;
        claim.construction = std::move(name);
        claim.source_problem = Problem::Retraction;
        claim.target_problem = Problem::SurjectiveColouring;
        claim.source_template = h;
        claim.target_template = h;
        return b.finish(std::move(claim));
    }

    auto chain_levels(const HardnessChain & chain) -> vector<vector<Vertex>>
    {
        return vector<vector<Vertex>>(chain.hosts.begin(), chain.hosts.begin() + chain.cycles.size());
    }
}

auto terminal_name(ChainTerminal t) -> std::string
{
    switch (t) {
    case ChainTerminal::EndoTrivialDirect: return "EndoTrivialDirect";
    case ChainTerminal::BaseI: return "BaseI";
    case ChainTerminal::BaseII: return "BaseII";
    case ChainTerminal::GeneralI: return "GeneralI";
    case ChainTerminal::GeneralII: return "GeneralII";
    }
    return "unknown";
}

auto local_indices(std::span<const Vertex> host, std::span<const Vertex> sub) -> vector<Vertex>
{
    auto sorted_host = sorted_unique(host);
    vector<Vertex> out;
    for (auto v : sub) {
        auto it = std::lower_bound(sorted_host.begin(), sorted_host.end(), v);
        if (it == sorted_host.end() || *it != v)
            invalid_input("vertex " + std::to_string(v) + " is not in the host set");
        out.push_back(static_cast<Vertex>(it - sorted_host.begin()));
    }
    return out;
}

auto reduce_base_case_I(const RetractionInstance & g, const Digraph & h, std::span<const Vertex> h0,
    const HamiltonCycle & c) -> ReductionInstance
{
    require_reflexive_tournament(h);
    check_sub_cycle(h, h0, c);
    auto members = sorted_unique(h0);
    if (! is_endo_trivial(induced_subgraph(h, members)).holds)
        precondition_failed("H0 is not endo-trivial");
    return general_I(h, {members}, {c}, g, "base1");
}

auto reduce_base_case_II(const RetractionInstance & g, const Digraph & h, std::span<const Vertex> h0,
    const HamiltonCycle & c) -> ReductionInstance
{
    require_reflexive_tournament(h);
    check_sub_cycle(h, h0, c);
    auto members = sorted_unique(h0);
    if (! is_endo_trivial(induced_subgraph(h, members)).holds)
        precondition_failed("H0 is not endo-trivial");
    if (! is_pair_endo_trivial(h, members).holds)
        precondition_failed("(H, H0) is not endo-trivial");
    if (! spill(h, members, c).full(h.size()))
        precondition_failed("spill of H0 is not all of V(H)");
    return general_II(h, {members}, {c}, g, "base2");
}

auto reduce_general_I(const HardnessChain & chain, const Digraph & h, const RetractionInstance & g)
    -> ReductionInstance
{
    if (chain.terminal != ChainTerminal::BaseI && chain.terminal != ChainTerminal::GeneralI)
        precondition_failed("chain does not end in a retraction-to-all-copies case");
    if (! verify_chain(chain, h))
        precondition_failed("chain facts do not re-verify");
    return general_I(h, chain_levels(chain), chain.cycles, g, "gen1");
}

auto reduce_general_II(const HardnessChain & chain, const Digraph & h, const RetractionInstance & g)
    -> ReductionInstance
{
    if (chain.terminal != ChainTerminal::BaseII && chain.terminal != ChainTerminal::GeneralII)
        precondition_failed("chain does not end in a pair endo-trivial case");
    if (! verify_chain(chain, h))
        precondition_failed("chain facts do not re-verify");
    return general_II(h, chain_levels(chain), chain.cycles, g, "gen2");
}

auto reduce_components(const Digraph & g, const Digraph & h, size_t i) -> ReductionInstance
{
    require_reflexive_tournament(h);
    auto components = strong_components(h);
    if (i >= components.size())
        invalid_input("component index " + std::to_string(i) + " out of range");
    if (components[i].size() < 2)
        precondition_failed("component " + std::to_string(i) + " is a single vertex");
    if (g.size() == 0 || ! is_strongly_connected(g))
        precondition_failed("instance must be strongly connected");

    InstanceBuilder b;
    for (Vertex u = 0; u < g.size(); ++u)
        b.add_vertex(Provenance{u, std::nullopt, std::nullopt, std::nullopt});
    for (auto & [u, v] : g.edges())
        b.add_edge(u, v);
    vector<std::optional<Vertex>> slot(h.size());
    vector<size_t> component_of(h.size());
    for (size_t c = 0; c < components.size(); ++c)
        for (auto v : components[c])
            component_of[v] = c;
    for (Vertex v = 0; v < h.size(); ++v)
        if (component_of[v] != i)
            slot[v] = b.add_vertex(Provenance{std::nullopt, v, std::nullopt, std::nullopt});
    for (auto & [u, v] : h.edges())
        if (slot[u] && slot[v])
            b.add_edge(*slot[u], *slot[v]);
    for (Vertex v = 0; v < h.size(); ++v) {
        if (! slot[v])
            continue;
        for (Vertex u = 0; u < g.size(); ++u) {
            if (component_of[v] < i)
                b.add_edge(*slot[v], u);
            else
                b.add_edge(u, *slot[v]);
        }
    }

    Claim claim;
    claim.construction = "components";
    claim.source_problem = Problem::SurjectiveColouring;
    claim.target_problem = Problem::SurjectiveColouring;
    claim.source_template = induced_subgraph(h, components[i]);
    claim.target_template = h;
    return b.finish(std::move(claim));
}

auto make_strongly_connected(const RetractionInstance & g, const Digraph & h) -> ReductionInstance
{
    require_reflexive_tournament(h);
    if (! is_strongly_connected(h))
        precondition_failed("template must be strongly connected");
    validate_retraction_instance(g, h);

    InstanceBuilder b;
    tag_instance_vertices(b, g, all_vertices(h.size()));
    auto components = strong_components(g.graph);
    if (components.size() > 1) {
        auto length = h.size();
        for (size_t c = 0; c < components.size(); ++c) {
            auto from = components[c].front();
            auto to = components[(c + 1) % components.size()].front();
            auto prev = from;
            for (size_t p = 0; p < length; ++p) {
                auto fresh = b.add_vertex(Provenance{std::nullopt, std::nullopt, std::nullopt, PathTag{c, p}});
                b.add_edge(prev, fresh);
                prev = fresh;
            }
            b.add_edge(prev, to);
        }
    }

    Claim claim;
    claim.construction = "connectify";
    claim.source_problem = Problem::Retraction;
    claim.target_problem = Problem::Retraction;
    claim.source_template = h;
    claim.target_template = h;
    auto size = b.size();
    return b.finish(std::move(claim), VertexMap(size, g.embedding.image));
}

auto copies_of(const Digraph & h, std::span<const Vertex> s, const HamiltonCycle & c) -> vector<SubCopy>
{
    auto members = sorted_unique(s);
    auto pattern = induced_subgraph(h, members);
    auto local_cycle = local_indices(members, c.order);
    vector<SubCopy> result;
    std::map<vector<Vertex>, bool> retracts;
    std::map<vector<Vertex>, bool> full;
    for_each_embedding(pattern, h, [&](const vector<Vertex> & e) {
        SubCopy copy;
        copy.embedding = VertexMap(h.size(), e);
        copy.image = sorted_unique(e);
        for (auto a : local_cycle)
            copy.cycle.order.push_back(e[a]);
        if (! retracts.contains(copy.image))
            retracts[copy.image] = retracts_to(h, copy.image).has_value();
        copy.retracts = retracts[copy.image];
        auto key = copy.cycle.order;
        if (! full.contains(key))
            full[key] = spill(h, copy.image, copy.cycle).full(h.size());
        copy.full_spill = full[key];
        result.push_back(std::move(copy));
        return true;
    });
    return result;
}

auto verify_chain(const HardnessChain & chain, const Digraph & h) -> bool
{
    try {
        if (! is_reflexive_tournament(h) || chain.hosts.empty() || chain.cycles.empty())
            return false;
        auto everything = all_vertices(h.size());
        if (chain.hosts.back() != everything)
            return false;
        for (auto & host : chain.hosts)
            if (host != sorted_unique(host))
                return false;
        auto k = chain.top_level();

        if (chain.terminal == ChainTerminal::EndoTrivialDirect) {
            if (chain.hosts.size() != 1 || chain.cycles.size() != 1 || ! chain.spills.empty())
                return false;
            if (chain.sizes != vector<size_t>{h.size()})
                return false;
            check_sub_cycle(h, everything, chain.cycles[0]);
            return is_endo_trivial(h).holds;
        }

        if (chain.hosts.size() != chain.cycles.size() + 1 || chain.spills.size() != chain.cycles.size()
            || chain.sizes.size() != chain.cycles.size())
            return false;
        bool base = chain.terminal == ChainTerminal::BaseI || chain.terminal == ChainTerminal::BaseII;
        if (base != (k == 0))
            return false;

        for (size_t i = 0; i + 1 < chain.hosts.size(); ++i) {
            auto & lower = chain.hosts[i];
            auto & upper = chain.hosts[i + 1];
            if (lower.size() >= upper.size() || ! std::includes(upper.begin(), upper.end(), lower.begin(), lower.end()))
                return false;
        }
        for (size_t i = 0; i <= k; ++i) {
            if (chain.sizes[i] != chain.hosts[i].size())
                return false;
            check_sub_cycle(h, chain.hosts[i], chain.cycles[i]);
        }
        if (! is_endo_trivial(induced_subgraph(h, chain.hosts[0])).holds)
            return false;

        bool type_two = chain.terminal == ChainTerminal::BaseII || chain.terminal == ChainTerminal::GeneralII;
        // Pair endo-triviality of (H_i, H_{i-1}); the last link only for case II.
        auto last_pair = type_two ? k + 1 : k;
        for (size_t i = 1; i <= last_pair; ++i) {
            auto & host = chain.hosts[i];
            auto local = induced_subgraph(h, host);
            if (! is_pair_endo_trivial(local, local_indices(host, chain.hosts[i - 1])).holds)
                return false;
        }
        // Spill certificates, each in the local numbering of the upper host.
        for (size_t i = 0; i <= k; ++i) {
            auto & upper = chain.hosts[i + 1];
            auto local = induced_subgraph(h, upper);
            auto & cert = chain.spills[i];
            if (cert.sub != local_indices(upper, chain.hosts[i]) || cert.cycle != localise(upper, chain.cycles[i]))
                return false;
            if (! cert.full(upper.size()) || ! verify_spill_certificate(local, cert))
                return false;
        }
        if (! type_two) {
            auto & hk = chain.hosts[k];
            if (! retracts_to(h, hk))
                return false;
            for (auto & copy : copies_of(h, hk, chain.cycles[k]))
                if (copy.full_spill && ! copy.retracts)
                    return false;
        }
        return true;
    }
    catch (const Error &) {
        return false;
    }
}

auto build_chain(const Digraph & h, const vector<vector<Vertex>> & levels, ChainTerminal terminal) -> HardnessChain
{
    require_reflexive_tournament(h);
    auto everything = all_vertices(h.size());
    HardnessChain chain;
    chain.terminal = terminal;
    for (auto & level : levels) {
        auto members = sorted_unique(level);
        for (auto v : members)
            if (v >= h.size())
                invalid_input("chain level names vertex " + std::to_string(v) + " outside the template");
        auto local = induced_subgraph(h, members);
        if (! is_strongly_connected(local) || members.size() < 2)
            precondition_failed("every chain level must induce a strongly connected subtournament");
        chain.cycles.push_back(HamiltonCycle{mapped(members, hamilton_cycle(local).order)});
        chain.sizes.push_back(members.size());
        chain.hosts.push_back(std::move(members));
    }
    if (terminal != ChainTerminal::EndoTrivialDirect) {
        chain.hosts.push_back(everything);
        for (size_t i = 0; i < chain.cycles.size(); ++i) {
            auto & upper = chain.hosts[i + 1];
            chain.spills.push_back(spill(induced_subgraph(h, upper), local_indices(upper, chain.hosts[i]),
                localise(upper, chain.cycles[i])));
        }
    }
    if (! verify_chain(chain, h))
        precondition_failed("levels do not form a valid " + terminal_name(terminal) + " chain");
    return chain;
}

} // namespace surjhom
