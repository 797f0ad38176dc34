#include <surjhom/classify.hpp>
#include <surjhom/endo.hpp>
#include <surjhom/error.hpp>

#include <algorithm>
#include <numeric>

namespace surjhom {

using std::size_t;
using std::vector;

namespace {
    // Calls visit on every k-subset of pool (sorted pool gives sorted
    // subsets, in lexicographic order) until visit returns true.
    auto first_combination(const vector<Vertex> & pool, size_t k, const std::function<bool(const vector<Vertex> &)> & visit)
        -> bool
    {
        if (k > pool.size())
            return false;
        vector<size_t> idx(k);
        std::iota(idx.begin(), idx.end(), size_t{0});
        vector<Vertex> pick(k);
        while (true) {
            for (size_t i = 0; i < k; ++i)
                pick[i] = pool[idx[i]];
            if (visit(pick))
                return true;
            size_t i = k;
            while (i > 0 && idx[i - 1] == pool.size() - k + (i - 1))
                --i;
            if (i == 0)
                return false;
            ++idx[i - 1];
            for (size_t j = i; j < k; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }

    auto ambient_cycle(const Digraph & h, const vector<Vertex> & s) -> HamiltonCycle
    {
        auto local = hamilton_cycle(induced_subgraph(h, s));
        HamiltonCycle c;
        for (auto a : local.order)
            c.order.push_back(s[a]);
        return c;
    }

    auto union_sorted(const vector<Vertex> & a, const vector<Vertex> & b) -> vector<Vertex>
    {
        vector<Vertex> out;
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        return out;
    }

    auto apply(const VertexMap & e, const vector<Vertex> & local_host, const vector<Vertex> & s) -> vector<Vertex>
    {
        vector<Vertex> out;
        for (auto a : local_indices(local_host, s))
            out.push_back(e(a));
        return out;
    }

    auto finish_chain(const Digraph & h, vector<vector<Vertex>> levels, vector<HamiltonCycle> cycles, ChainTerminal t)
        -> HardnessChain
    {
        HardnessChain chain;
        vector<Vertex> everything(h.size());
        std::iota(everything.begin(), everything.end(), Vertex{0});
        chain.hosts = std::move(levels);
        chain.hosts.push_back(everything);
        chain.cycles = std::move(cycles);
        chain.terminal = t;
        for (size_t i = 0; i < chain.cycles.size(); ++i) {
            chain.sizes.push_back(chain.hosts[i].size());
            auto & upper = chain.hosts[i + 1];
            auto local = induced_subgraph(h, upper);
            auto cert = spill(local, local_indices(upper, chain.hosts[i]),
                HamiltonCycle{local_indices(upper, chain.cycles[i].order)});
            if (! cert.full(upper.size()))
                throw Error(ErrorKind::Internal, "link " + std::to_string(i) + " of the hardness chain lacks a full spill");
            chain.spills.push_back(std::move(cert));
        }
        return chain;
    }
}

auto verdict_name(Verdict v) -> std::string
{
    switch (v) {
    case Verdict::TractableTransitive: return "TractableTransitive";
    case Verdict::NPCompleteNonTransitive: return "NPCompleteNonTransitive";
    case Verdict::NPCompleteSemicomplete: return "NPCompleteSemicomplete";
    case Verdict::TrivialSmall: return "TrivialSmall";
    case Verdict::EssentiallyUnaryHard: return "EssentiallyUnaryHard";
    case Verdict::WNUTractableCandidate: return "WNUTractableCandidate";
    case Verdict::Unresolved: return "Unresolved";
    }
    return "unknown";
}

auto find_hardness_chain(const Digraph & h) -> HardnessChain
{
    if (! is_reflexive_tournament(h) || ! is_strongly_connected(h) || h.size() < 3)
        precondition_failed("hardness chains need a strongly connected reflexive tournament on at least 3 vertices");
    auto n = h.size();
    vector<Vertex> everything(n);
    std::iota(everything.begin(), everything.end(), Vertex{0});

    if (is_endo_trivial(h).holds) {
        HardnessChain chain;
        chain.hosts = {everything};
        chain.cycles = {hamilton_cycle(h)};
        chain.sizes = {n};
        chain.terminal = ChainTerminal::EndoTrivialDirect;
        return chain;
    }

    // Smallest endo-trivial retract; strongly connected so it has a cycle.
    vector<Vertex> h0;
    for (size_t k = 3; k < n && h0.empty(); ++k)
        first_combination(everything, k, [&](const vector<Vertex> & s) {
            auto sub = induced_subgraph(h, s);
            if (! is_strongly_connected(sub) || ! is_endo_trivial(sub).holds || ! retracts_to(h, s))
                return false;
            h0 = s;
            return true;
        });
    if (h0.empty())
        throw Error(ErrorKind::Internal, "no endo-trivial retract found");

    vector<vector<Vertex>> levels{h0};
    vector<HamiltonCycle> cycles{ambient_cycle(h, h0)};
    while (true) {
        auto & top = levels.back();
        auto copies = copies_of(h, top, cycles.back());
        auto bad = std::find_if(copies.begin(), copies.end(), [](auto & c) { return c.full_spill && ! c.retracts; });
        bool first_level = levels.size() == 1;
        if (bad == copies.end())
            return finish_chain(h, levels, cycles, first_level ? ChainTerminal::BaseI : ChainTerminal::GeneralI);

        // Move the whole chain onto the bad copy.
        vector<vector<Vertex>> moved;
        vector<HamiltonCycle> moved_cycles;
        for (size_t i = 0; i < levels.size(); ++i) {
            auto image = apply(bad->embedding, top, levels[i]);
            std::sort(image.begin(), image.end());
            moved.push_back(image);
            moved_cycles.push_back(HamiltonCycle{apply(bad->embedding, top, cycles[i].order)});
        }
        if (is_pair_endo_trivial(h, bad->image).holds)
            return finish_chain(h, moved, moved_cycles, first_level ? ChainTerminal::BaseII : ChainTerminal::GeneralII);

        auto & base = bad->image;
        vector<Vertex> rest;
        std::set_difference(everything.begin(), everything.end(), base.begin(), base.end(), std::back_inserter(rest));
        vector<Vertex> next;
        for (size_t extra = 1; extra < rest.size() && next.empty(); ++extra)
            first_combination(rest, extra, [&](const vector<Vertex> & add) {
                auto t = union_sorted(base, add);
                auto sub = induced_subgraph(h, t);
                if (! is_strongly_connected(sub) || ! retracts_to(h, t))
                    return false;
                if (! is_pair_endo_trivial(sub, local_indices(t, base)).holds)
                    return false;
                next = t;
                return true;
            });
        if (next.empty())
            throw Error(ErrorKind::Internal, "no intermediate subtournament between a bad copy and the template");
        moved.push_back(next);
        moved_cycles.push_back(ambient_cycle(h, next));
        levels = std::move(moved);
        cycles = std::move(moved_cycles);
    }
}

auto classify_reflexive_tournament(const Digraph & h) -> Classification
{
    if (! is_reflexive_tournament(h) || h.size() < 2)
        precondition_failed("classification needs a reflexive tournament with at least 2 vertices");
    Classification c;
    if (is_transitive_tournament(h)) {
        c.verdict = Verdict::TractableTransitive;
        c.median = find_majority_median(h)->operation;
        c.citations = {"transitive reflexive tournament: median polymorphism, retraction in NL"};
        return c;
    }
    c.verdict = Verdict::NPCompleteNonTransitive;
    if (is_strongly_connected(h)) {
        c.chain = find_hardness_chain(h);
        c.citations = {"strongly connected reflexive tournament: hardness chain reduction from retraction"};
        return c;
    }
    auto components = strong_components(h);
    size_t best = 0;
    for (size_t i = 0; i < components.size(); ++i)
        if (components[i].size() > components[best].size())
            best = i;
    c.component = ComponentPointer{best, components[best]};
    c.chain = find_hardness_chain(induced_subgraph(h, components[best]));
    c.citations = {"non-transitive reflexive tournament: reduction from a strongly connected component"};
    c.evidence.push_back("component " + std::to_string(best) + " of " + std::to_string(components.size())
        + " has " + std::to_string(components[best].size()) + " vertices");
    return c;
}

auto count_directed_cycles(const Digraph & h) -> size_t
{
    // Cycles counted once, from their least vertex.
    size_t count = 0;
    auto n = h.size();
    vector<char> on_path(n, 0);
    std::function<void(Vertex, Vertex, size_t)> walk = [&](Vertex start, Vertex at, size_t length) {
        for (auto next : h.out(at)) {
            if (next == start && length >= 1 && at != start)
                ++count;
            else if (next > start && ! on_path[next]) {
                on_path[next] = 1;
                walk(start, next, length + 1);
                on_path[next] = 0;
            }
        }
    };
    for (Vertex s = 0; s < n; ++s) {
        on_path[s] = 1;
        walk(s, s, 0);
        on_path[s] = 0;
    }
    return count;
}

auto classify_small_digraph(const Digraph & h) -> Classification
{
    if (h.size() > 3)
        precondition_failed("small-digraph classification covers at most 3 vertices");
    if (h.size() == 0)
        precondition_failed("template has no vertices");
    Classification c;
    auto n = h.size();
    if (n == 1 || h.edge_count() == n * n) {
        c.verdict = Verdict::TrivialSmall;
        c.citations = {n == 1 ? "single-vertex template" : "complete reflexive template: every map is a homomorphism"};
        return c;
    }
    if (is_irreflexive(h) && is_semicomplete(h) && count_directed_cycles(h) > 1) {
        c.verdict = Verdict::NPCompleteSemicomplete;
        c.citations = {"irreflexive semicomplete template with more than one cycle"};
        c.evidence.push_back(std::to_string(count_directed_cycles(h)) + " directed cycles");
        return c;
    }
    if (is_reflexive_tournament(h))
        return classify_reflexive_tournament(h);
    if (auto w = find_wnu(h, 3)) {
        c.verdict = Verdict::WNUTractableCandidate;
        c.wnu = std::move(w);
        c.citations = {"ternary weak near-unanimity polymorphism"};
        return c;
    }
    c.evidence.push_back("no ternary weak near-unanimity polymorphism");
    auto binary = all_polymorphisms_essentially_unary(h, 2);
    auto ternary = all_polymorphisms_essentially_unary(h, 3);
    c.evidence.push_back(std::to_string(binary.count) + " binary and " + std::to_string(ternary.count)
        + " ternary polymorphisms");
    if (binary.holds && ternary.holds) {
        c.verdict = Verdict::EssentiallyUnaryHard;
        c.citations = {"all polymorphisms up to arity 3 essentially unary"};
        return c;
    }
    c.verdict = Verdict::Unresolved;
    return c;
}

auto verify_classification(const Digraph & h, const Classification & c) -> bool
{
    try {
        if (c.median && ! (is_polymorphism(h, *c.median) && is_majority(*c.median)))
            return false;
        if (c.wnu && ! (is_polymorphism(h, *c.wnu) && is_wnu(*c.wnu)))
            return false;
        if (c.chain) {
            auto host = c.component ? induced_subgraph(h, c.component->vertices) : h;
            if (! verify_chain(*c.chain, host))
                return false;
        }
        switch (c.verdict) {
        case Verdict::TractableTransitive: return c.median.has_value();
        case Verdict::NPCompleteNonTransitive: return c.chain.has_value();
        case Verdict::WNUTractableCandidate: return c.wnu.has_value();
        default: return true;
        }
    }
    catch (const Error &) {
        return false;
    }
}

} // namespace surjhom
