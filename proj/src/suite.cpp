#include <surjhom/catalogue.hpp>
#include <surjhom/classify.hpp>
#include <surjhom/endo.hpp>
#include <surjhom/error.hpp>
#include <surjhom/figures.hpp>
#include <surjhom/generate.hpp>
#include <surjhom/suite.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <numeric>
#include <random>

namespace surjhom {

using std::size_t;
using std::string;
using std::vector;

namespace {
    struct Outcome {
        bool passed;
        string detail;
    };

    // Naive reference search: assign vertices in index order, check edges
    // back to assigned vertices only. Stops when accept returns true.
    auto naive_search(const Digraph & g, const Digraph & h, const std::function<bool(Vertex, Vertex)> & allowed,
        const std::function<bool(const vector<Vertex> &)> & accept) -> bool
    {
        vector<Vertex> f(g.size(), 0);
        std::function<bool(Vertex)> go = [&](Vertex v) -> bool {
            if (v == g.size())
                return accept(f);
            for (Vertex x = 0; x < h.size(); ++x) {
                if (! allowed(v, x))
                    continue;
                f[v] = x;
                bool ok = true;
                for (Vertex u = 0; u <= v && ok; ++u)
                    ok = (! g.has_edge(u, v) || h.has_edge(f[u], x)) && (! g.has_edge(v, u) || h.has_edge(x, f[u]));
                if (ok && go(v + 1))
                    return true;
            }
            return false;
        };
        return go(0);
    }

    auto anything(Vertex, Vertex) -> bool { return true; }

    auto onto(const vector<Vertex> & f, size_t n) -> bool
    {
        vector<char> hit(n, 0);
        for (auto v : f)
            hit[v] = 1;
        return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
    }

    auto naive_retracts(const RetractionInstance & inst, const Digraph & h) -> bool
    {
        vector<std::optional<Vertex>> fixed(inst.graph.size());
        for (Vertex a = 0; a < inst.embedding.domain_size(); ++a)
            fixed[inst.embedding(a)] = a;
        return naive_search(inst.graph, h, [&](Vertex v, Vertex x) { return ! fixed[v] || *fixed[v] == x; },
            [](auto &) { return true; });
    }

    auto naive_onto(const Digraph & g, const Digraph & h) -> bool
    {
        return naive_search(g, h, anything, [&](auto & f) { return onto(f, h.size()); });
    }

    auto all_vertices(size_t n) -> vector<Vertex>
    {
        vector<Vertex> v(n);
        std::iota(v.begin(), v.end(), Vertex{0});
        return v;
    }

    // Base copied onto vertices 0..|base|-1, extra vertices with random edges
    // to everything (the base itself is left induced).
    auto random_instance(const Digraph & base, size_t extra, double density, std::mt19937 & rng) -> RetractionInstance
    {
        auto n = base.size() + extra;
        auto edges = base.edges();
        std::bernoulli_distribution coin(density);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = 0; v < n; ++v)
                if ((u >= base.size() || v >= base.size()) && coin(rng))
                    edges.emplace_back(u, v);
        return {Digraph(n, std::move(edges)), VertexMap(n, all_vertices(base.size()))};
    }

    auto target_answer(const ReductionInstance & r) -> bool
    {
        if (r.claim.target_problem == Problem::Retraction)
            return find_retraction(RetractionInstance{r.digraph, *r.embedding}, r.claim.target_template).has_value();
        return find_surjective_homomorphism(r.digraph, r.claim.target_template).has_value();
    }

    struct Tally {
        size_t cases = 0, yes = 0, mismatches = 0;

        auto add(bool source, bool target) -> void
        {
            ++cases;
            yes += source;
            mismatches += source != target;
        }
        auto text(const string & name) const -> string
        {
            return name + " " + std::to_string(cases) + " cases (" + std::to_string(yes) + " yes), "
                + std::to_string(mismatches) + " mismatches";
        }
    };

    auto ambient_cycle(const Digraph & h, const vector<Vertex> & s) -> HamiltonCycle
    {
        HamiltonCycle c;
        for (auto a : hamilton_cycle(induced_subgraph(h, s)).order)
            c.order.push_back(s[a]);
        return c;
    }

    auto members_of(uint32_t mask, size_t n) -> vector<Vertex>
    {
        vector<Vertex> s;
        for (Vertex v = 0; v < n; ++v)
            if (mask >> v & 1)
                s.push_back(v);
        return s;
    }

    // First 2-link chain (H_0 ⊂ H_1 ⊂ V(H)) with the given terminal among
    // 6-vertex reflexive tournaments.
    auto two_link_chain(ChainTerminal terminal) -> std::optional<std::pair<Digraph, HardnessChain>>
    {
        for (auto & h : reflexive_tournaments(6)) {
            if (! is_strongly_connected(h))
                continue;
            auto n = h.size();
            for (uint32_t m1 = 1; m1 + 1 < (1u << n); ++m1) {
                auto h1 = members_of(m1, n);
                if (h1.size() < 4 || ! is_strongly_connected(induced_subgraph(h, h1)))
                    continue;
                for (uint32_t m0 = (m1 - 1) & m1; m0 != 0; m0 = (m0 - 1) & m1) {
                    auto h0 = members_of(m0, n);
                    if (h0.size() < 3 || ! is_strongly_connected(induced_subgraph(h, h0)))
                        continue;
                    try {
                        return std::pair{h, build_chain(h, {h0, h1}, terminal)};
                    }
                    catch (const Error &) {
                    }
                }
            }
        }
        return std::nullopt;
    }

    auto wnu_table() -> Outcome
    {
        auto hg = bundled_digraph("Hg");
        auto p = hg_wnu_table();
        bool ok = is_polymorphism(hg, p) && p.is_idempotent() && is_wnu(p);
        return {ok, "polymorphism, idempotent and WNU: " + string(ok ? "yes" : "no")};
    }

    auto essential_unarity() -> Outcome
    {
        auto h = bundled_digraph("DC3*");
        // Binary tables by brute force over all 3^9.
        size_t binary = 0;
        bool binary_unary = true;
        TupleCodec tables(3, 9);
        for (size_t t = 0; t < tables.count(); ++t) {
            Polymorphism p{2, 3, tables.decode(t)};
            if (! is_polymorphism(h, p))
                continue;
            ++binary;
            binary_unary = binary_unary && essentially_unary(p).has_value();
        }
        auto ternary = all_polymorphisms_essentially_unary(h, 3);
        auto via_search = all_polymorphisms_essentially_unary(h, 2);
        bool ok = binary == 9 && binary_unary && via_search.count == 9 && via_search.holds && ternary.count == 12
            && ternary.holds;
        return {ok, std::to_string(binary) + " binary (search " + std::to_string(via_search.count) + "), "
                + std::to_string(ternary.count) + " ternary, all essentially unary: "
                + (binary_unary && ternary.holds ? "yes" : "no")};
    }

    auto dagger() -> Outcome
    {
        auto d3 = verify_dagger(3);
        auto d4 = verify_dagger(4);
        return {d3.holds && d4.holds, "m=3: " + std::to_string(d3.top_maps.size()) + " top maps, m=4: "
                + std::to_string(d4.top_maps.size()) + " top maps"};
    }

    auto collapse() -> Outcome
    {
        auto cyl = build_cyl(3);
        size_t homs = 0, bottom_constant = 0, failures = 0, templates = 0;
        for (size_t n = 1; n <= 4; ++n)
            for_each_labelled_tournament(n, true, [&](const Digraph & h) {
                ++templates;
                for_each_homomorphism(cyl.digraph, h, {}, [&](const VertexMap & f) {
                    ++homs;
                    bool flat = std::all_of(cyl.bottom.begin(), cyl.bottom.end(),
                        [&](Vertex v) { return f(v) == f(cyl.bottom[0]); });
                    if (flat) {
                        ++bottom_constant;
                        failures += ! f.is_constant();
                    }
                    return true;
                });
            });
        return {failures == 0, std::to_string(templates) + " labelled templates, " + std::to_string(homs)
                + " homomorphisms, " + std::to_string(bottom_constant) + " constant on the bottom, "
                + std::to_string(failures) + " not globally constant"};
    }

    auto full_spill() -> Outcome
    {
        vector<std::pair<Digraph, vector<Vertex>>> cases{{bundled_digraph("T4"), {0, 1, 2}}};
        auto t4 = bundled_digraph("T4");
        for (size_t n = 4; n <= 5 && cases.size() < 3; ++n)
            for (auto & h : reflexive_tournaments(n)) {
                if (cases.size() == 3 || are_isomorphic(h, t4))
                    continue;
                for (uint32_t m = 0; m < (1u << n); ++m) {
                    auto s = members_of(m, n);
                    if (s.size() == 3 && is_strongly_connected(induced_subgraph(h, s)) && retracts_to(h, s)) {
                        cases.emplace_back(h, s);
                        break;
                    }
                }
            }
        size_t full = 0;
        for (auto & [h, s] : cases) {
            auto cert = spill(h, s, ambient_cycle(h, s));
            full += cert.full(h.size()) && verify_spill_certificate(h, cert);
        }
        return {cases.size() == 3 && full == 3,
            std::to_string(full) + " of " + std::to_string(cases.size()) + " tournaments have full spill"};
    }

    auto figures() -> Outcome
    {
        auto s = search_figure_tournaments();
        size_t verified = 0;
        for (auto & c : s.one_way)
            verified += is_reflexive_tournament(c.tournament) && check_one_way(c.tournament).holds();
        for (auto & c : s.full_spill) {
            auto e = check_full_spill(c.tournament);
            verified += is_reflexive_tournament(c.tournament) && e.holds()
                && verify_spill_certificate(c.tournament, e.spill);
        }
        bool ok = ! s.one_way.empty() && ! s.full_spill.empty() && verified == s.one_way.size() + s.full_spill.size();
        return {ok, std::to_string(s.one_way.size()) + " one-way and " + std::to_string(s.full_spill.size())
                + " full-spill orientations, all re-verified: " + (verified == s.one_way.size() + s.full_spill.size() ? "yes" : "no")};
    }

    auto reductions() -> Outcome
    {
        std::mt19937 rng(20240601);
        Tally base1, base2, components, connectify, general1, general2;

        // Base Case I on every strongly connected 4-5 vertex tournament whose chain ends there.
        vector<std::pair<Digraph, vector<Vertex>>> base1_templates;
        vector<std::pair<Digraph, vector<Vertex>>> base2_templates;
        for (size_t n = 4; n <= 5; ++n)
            for (auto & h : reflexive_tournaments(n)) {
                if (! is_strongly_connected(h))
                    continue;
                auto chain = find_hardness_chain(h);
                if (chain.terminal == ChainTerminal::BaseI)
                    base1_templates.emplace_back(h, chain.hosts[0]);
                for (uint32_t m = 0; m < (1u << n); ++m) {
                    auto s = members_of(m, n);
                    if (s.size() < 3 || s.size() == n || ! is_strongly_connected(induced_subgraph(h, s)))
                        continue;
                    if (! is_endo_trivial(induced_subgraph(h, s)).holds || ! is_pair_endo_trivial(h, s).holds)
                        continue;
                    if (spill(h, s, ambient_cycle(h, s)).full(n))
                        base2_templates.emplace_back(h, s);
                }
            }
        for (size_t t = 0; t < 60; ++t) {
            auto & [h, h0] = base1_templates[t % base1_templates.size()];
            auto sub = induced_subgraph(h, h0);
            auto g = random_instance(sub, 1 + t % 3, 0.3 + 0.1 * (t % 4), rng);
            base1.add(naive_retracts(g, sub), target_answer(reduce_base_case_I(g, h, h0, ambient_cycle(h, h0))));
        }
        for (size_t t = 0; t < 60 && ! base2_templates.empty(); ++t) {
            auto & [h, h0] = base2_templates[t % base2_templates.size()];
            auto g = random_instance(h, 1, 0.2 + 0.2 * (t % 4), rng);
            base2.add(naive_retracts(g, h), target_answer(reduce_base_case_II(g, h, h0, ambient_cycle(h, h0))));
        }

        // Components: templates with a component of size > 1 and at least two components.
        vector<std::pair<Digraph, size_t>> split;
        for (size_t n = 4; n <= 5; ++n)
            for (auto & h : reflexive_tournaments(n)) {
                auto parts = strong_components(h);
                for (size_t i = 0; i < parts.size() && parts.size() > 1; ++i)
                    if (parts[i].size() > 1)
                        split.emplace_back(h, i);
            }
        for (size_t t = 0; t < 60; ++t) {
            auto & [h, i] = split[t % split.size()];
            auto part = induced_subgraph(h, strong_components(h)[i]);
            Digraph g;
            // Every other instance contains a copy of the component.
            auto seed = t % 2 == 0 ? part : Digraph(0, {});
            do {
                g = seed.size() == 0 ? random_instance(seed, 2 + t % 5, 0.3 + 0.1 * (t % 5), rng).graph
                                     : random_instance(seed, 1 + t % (6 - seed.size()), 0.2, rng).graph;
            } while (! is_strongly_connected(g));
            components.add(naive_onto(g, part), target_answer(reduce_components(g, h, i)));
        }

        // Connectify on retraction instances that are usually not strongly connected.
        vector<Digraph> hosts{bundled_digraph("DC3*"), bundled_digraph("T4")};
        for (auto & h : reflexive_tournaments(5))
            if (is_strongly_connected(h) && hosts.size() < 6)
                hosts.push_back(h);
        for (size_t t = 0; t < 60; ++t) {
            auto & h = hosts[t % hosts.size()];
            auto g = random_instance(h, 1 + t % (7 - h.size()), 0.15 + 0.1 * (t % 3), rng);
            connectify.add(naive_retracts(g, h), target_answer(make_strongly_connected(g, h)));
        }

        auto first = two_link_chain(ChainTerminal::GeneralI);
        auto second = two_link_chain(ChainTerminal::GeneralII);
        if (first) {
            auto & [h, chain] = *first;
            auto top = induced_subgraph(h, chain.hosts[1]);
            for (size_t t = 0; t < 8; ++t) {
                auto g = random_instance(top, t % 2, 0.3 + 0.2 * (t % 3), rng);
                general1.add(naive_retracts(g, top), target_answer(reduce_general_I(chain, h, g)));
            }
        }
        if (second) {
            auto & [h, chain] = *second;
            for (size_t t = 0; t < 8; ++t) {
                auto g = random_instance(h, t % 2, 0.2 + 0.2 * (t % 3), rng);
                general2.add(naive_retracts(g, h), target_answer(reduce_general_II(chain, h, g)));
            }
        }

        bool ok = base1.cases >= 50 && base2.cases >= 50 && components.cases >= 50 && connectify.cases >= 50
            && general1.cases > 0 && general2.cases > 0;
        for (auto * t : {&base1, &base2, &components, &connectify, &general1, &general2})
            ok = ok && t->mismatches == 0;
        return {ok, base1.text("base I") + "; " + base2.text("base II") + "; " + components.text("components") + "; "
                + connectify.text("connectify") + "; " + general1.text("general I (2 links)") + "; "
                + general2.text("general II (2 links)")};
    }

    auto dichotomy() -> Outcome
    {
        size_t total = 0, wrong = 0, chains = 0;
        for (size_t n = 2; n <= 5; ++n)
            for (auto & h : reflexive_tournaments(n)) {
                ++total;
                auto c = classify_reflexive_tournament(h);
                bool tractable = c.verdict == Verdict::TractableTransitive;
                bool verified = verify_classification(h, c);
                if (c.verdict == Verdict::NPCompleteNonTransitive) {
                    verified = verified && c.chain.has_value();
                    chains += c.chain.has_value();
                }
                wrong += tractable != is_transitive_tournament(h) || ! verified;
            }
        return {wrong == 0, std::to_string(total) + " tournaments on 2-5 vertices, " + std::to_string(chains)
                + " verified chains, " + std::to_string(wrong) + " disagreements"};
    }

    auto endo_retract() -> Outcome
    {
        size_t total = 0, wrong = 0, trivial = 0;
        for (size_t n = 1; n <= 6; ++n)
            for (auto & h : reflexive_tournaments(n)) {
                ++total;
                auto e = is_endo_trivial(h).holds;
                trivial += e;
                wrong += e != is_retract_trivial(h).holds;
            }
        return {wrong == 0, std::to_string(total) + " tournaments, " + std::to_string(trivial) + " endo-trivial, "
                + std::to_string(wrong) + " disagreements"};
    }

    auto solvers() -> Outcome
    {
        vector<Digraph> small;
        for (size_t n = 1; n <= 3; ++n)
            for_each_labelled_digraph(n, [&](const Digraph & g) { small.push_back(g); });
        size_t pairs = 0, checks = 0, wrong = 0;
        auto agree = [&](bool exists, const std::optional<VertexMap> & found, const std::optional<vector<Vertex>> & first) {
            ++checks;
            bool ok = exists == found.has_value() && (! found || (first && found->image == *first));
            wrong += ! ok;
        };
        for (auto & g : small)
            for (auto & h : small) {
                ++pairs;
                // Naive first witnesses in lexicographic order.
                std::optional<vector<Vertex>> hom, surj, compact, strict, listed;
                naive_search(g, h, anything, [&](auto & f) { hom = f; return true; });
                naive_search(g, h, anything, [&](auto & f) { return onto(f, h.size()) && (surj = f, true); });
                auto covers = [&](const vector<Vertex> & f) {
                    VertexMap m(h.size(), f);
                    return is_compaction_witness(g, h, m);
                };
                naive_search(g, h, anything, [&](auto & f) { return covers(f) && (compact = f, true); });
                naive_search(g, h, anything, [&](auto & f) { return covers(f) && onto(f, h.size()) && (strict = f, true); });
                ListAssignment lists;
                for (Vertex v = 0; v < g.size(); ++v) {
                    lists.lists.emplace_back();
                    for (Vertex x = 0; x < h.size(); ++x)
                        if ((v + x + pairs) % 3 != 0)
                            lists.lists.back().push_back(x);
                }
                naive_search(g, h, [&](Vertex v, Vertex x) {
                    auto & l = lists.lists[v];
                    return std::find(l.begin(), l.end(), x) != l.end();
                }, [&](auto & f) { listed = f; return true; });

                agree(hom.has_value(), find_homomorphism(g, h), hom);
                agree(surj.has_value(), find_surjective_homomorphism(g, h), surj);
                agree(compact.has_value(), find_compaction(g, h, CompactionMode::EdgeSurjective), compact);
                agree(strict.has_value(), find_compaction(g, h, CompactionMode::Strict), strict);
                agree(listed.has_value(), find_list_homomorphism(g, h, lists), listed);

                // Retraction: every embedding of h into g.
                if (h.size() <= g.size())
                    for_each_embedding(h, g, [&](const vector<Vertex> & e) {
                        RetractionInstance inst{g, VertexMap(g.size(), e)};
                        std::optional<vector<Vertex>> r;
                        vector<std::optional<Vertex>> fixed(g.size());
                        for (Vertex a = 0; a < e.size(); ++a)
                            fixed[e[a]] = a;
                        naive_search(g, h, [&](Vertex v, Vertex x) { return ! fixed[v] || *fixed[v] == x; },
                            [&](auto & f) { r = f; return true; });
                        agree(r.has_value(), find_retraction(inst, h), r);
                        return false;
                    });
            }
        return {wrong == 0, std::to_string(pairs) + " pairs, " + std::to_string(checks) + " solver calls, "
                + std::to_string(wrong) + " disagreements with naive enumeration"};
    }

    struct Entry {
        string name;
        double budget;
        Outcome (*run)();
    };
}

auto run_suite() -> vector<SuiteItem>
{
    const vector<Entry> entries{
        {"01-wnu-table", 1, wnu_table},
        {"02-essential-unarity", 60, essential_unarity},
        {"03-gadget-rotations", 60, dagger},
        {"04-collapse", 300, collapse},
        {"05-spill", 60, full_spill},
        {"06-figures", 300, figures},
        {"07-reductions", 900, reductions},
        {"08-dichotomy", 600, dichotomy},
        {"09-endo-retract", 600, endo_retract},
        {"10-solver-oracle", 300, solvers},
    };
    vector<std::future<SuiteItem>> running;
    for (auto & e : entries)
        running.push_back(std::async(std::launch::async, [e] {
            SuiteItem item{e.name, false, "", 0, e.budget};
            auto start = std::chrono::steady_clock::now();
            try {
                auto out = e.run();
                item.passed = out.passed;
                item.detail = out.detail;
            }
            catch (const std::exception & ex) {
                item.detail = string("error: ") + ex.what();
            }
            item.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            if (item.seconds > item.budget_seconds) {
                item.passed = false;
                item.detail += " (over time budget)";
            }
            return item;
        }));
    vector<SuiteItem> items;
    for (auto & r : running)
        items.push_back(r.get());
    std::sort(items.begin(), items.end(), [](auto & a, auto & b) { return a.name < b.name; });
    return items;
}

auto to_json(const vector<SuiteItem> & items) -> json
{
    auto out = json::array();
    for (auto & i : items)
        out.push_back({{"name", i.name}, {"passed", i.passed}, {"detail", i.detail}, {"seconds", i.seconds},
            {"budget_seconds", i.budget_seconds}});
    return out;
}

} // namespace surjhom
