// Acceptance run: one PASS/FAIL line per criterion. Reference answers come
// from oracle.hpp; the library is only the thing under test.

#include "oracle.hpp"

#include <surjhom/catalogue.hpp>
#include <surjhom/classify.hpp>
#include <surjhom/endo.hpp>
#include <surjhom/error.hpp>
#include <surjhom/figures.hpp>
#include <surjhom/generate.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>

using namespace surjhom;
using std::size_t;
using std::string;
using std::vector;

namespace {

struct Result {
    bool passed;
    string detail;
};

auto yes(bool b) -> string { return b ? "yes" : "no"; }

auto ternary_index(size_t a, size_t b, size_t c) -> size_t { return a * 9 + b * 3 + c; }

auto wnu_table() -> Result
{
    auto hg = bundled_digraph("Hg");
    // Expected edge set and table written out from the definition.
    std::set<Edge> expected_edges{{0, 0}, {2, 2}, {0, 1}, {1, 0}, {0, 2}, {2, 0}, {2, 1}};
    auto edges = hg.edges();
    bool same_graph = hg.size() == 3 && std::set<Edge>(edges.begin(), edges.end()) == expected_edges;
    vector<Vertex> table(27, 0);
    table[ternary_index(1, 1, 1)] = 1;
    table[ternary_index(2, 2, 2)] = 2;
    auto p = hg_wnu_table();
    bool same_table = p.table == table;

    oracle::Adj a(hg);
    bool polymorphism = true;
    for (auto [x0, y0] : a.edges)
        for (auto [x1, y1] : a.edges)
            for (auto [x2, y2] : a.edges)
                polymorphism = polymorphism && a(table[ternary_index(x0, x1, x2)], table[ternary_index(y0, y1, y2)]);
    bool idempotent = true, wnu = true;
    for (Vertex x = 0; x < 3; ++x) {
        idempotent = idempotent && table[ternary_index(x, x, x)] == x;
        for (Vertex y = 0; y < 3; ++y) {
            auto v = table[ternary_index(y, x, x)];
            wnu = wnu && v == table[ternary_index(x, y, x)] && v == table[ternary_index(x, x, y)];
        }
    }
    bool library = is_polymorphism(hg, p) && p.is_idempotent() && is_wnu(p);
    return {same_graph && same_table && polymorphism && idempotent && wnu && library,
        "oracle: polymorphism " + yes(polymorphism) + ", idempotent " + yes(idempotent) + ", WNU " + yes(wnu)
            + "; library agrees " + yes(library)};
}

auto essential_unarity() -> Result
{
    auto h = bundled_digraph("DC3*");
    auto reference2 = oracle::polymorphisms(h, 2);
    auto reference3 = oracle::polymorphisms(h, 3);
    bool oracle_unary = true;
    for (auto & t : reference2)
        oracle_unary = oracle_unary && oracle::essentially_unary(t, 3, 2);
    for (auto & t : reference3)
        oracle_unary = oracle_unary && oracle::essentially_unary(t, 3, 3);

    auto to_set = [](const vector<Polymorphism> & ps) {
        std::set<vector<Vertex>> s;
        for (auto & p : ps)
            s.insert(p.table);
        return s;
    };
    auto lib2 = to_set(enumerate_polymorphisms(h, 2));
    auto lib3 = to_set(enumerate_polymorphisms(h, 3));
    bool same = lib2 == std::set<vector<Vertex>>(reference2.begin(), reference2.end())
        && lib3 == std::set<vector<Vertex>>(reference3.begin(), reference3.end());
    auto v2 = all_polymorphisms_essentially_unary(h, 2);
    auto v3 = all_polymorphisms_essentially_unary(h, 3);
    bool ok = reference2.size() == 9 && reference3.size() == 12 && oracle_unary && same && v2.holds && v3.holds
        && v2.count == 9 && v3.count == 12;
    return {ok, "oracle counts " + std::to_string(reference2.size()) + " binary, " + std::to_string(reference3.size())
            + " ternary (expected 9, 12); all essentially unary " + yes(oracle_unary) + "; library sets equal "
            + yes(same)};
}

// Top-copy maps of Cyl_m realised by homomorphisms to DC_m* that are the
// identity on the bottom copy, by brute force.
auto oracle_top_maps(size_t m) -> std::set<vector<Vertex>>
{
    auto cyl = oracle::cylinder(m);
    auto cycle = directed_cycle(m, true);
    oracle::Adj ca(cyl), ha(cycle);
    std::set<vector<Vertex>> maps;
    oracle::backtrack(ca, ha, [&](size_t v, Vertex x) { return v >= m || x == v; },
        [&](const oracle::Map & f) {
            maps.insert(vector<Vertex>(f.end() - static_cast<std::ptrdiff_t>(m), f.end()));
            return false;
        });
    return maps;
}

auto dagger() -> Result
{
    bool ok = true;
    string detail;
    for (size_t m : {3u, 4u}) {
        auto reference = oracle_top_maps(m);
        std::set<vector<Vertex>> rotations;
        for (size_t s = 0; s < m; ++s) {
            vector<Vertex> r(m);
            for (size_t i = 0; i < m; ++i)
                r[i] = static_cast<Vertex>((i + s) % m);
            rotations.insert(r);
        }
        auto report = verify_dagger(m);
        std::set<vector<Vertex>> library;
        for (auto & f : report.top_maps)
            library.insert(f.image);
        ok = ok && reference == rotations && library == reference && report.holds;
        detail += (detail.empty() ? "" : "; ") + string("m=") + std::to_string(m) + ": oracle "
            + std::to_string(reference.size()) + " maps, all rotations " + yes(reference == rotations)
            + ", library equal " + yes(library == reference);
    }
    return {ok, detail};
}

auto collapse() -> Result
{
    auto cyl = oracle::cylinder(3);
    oracle::Adj ca(cyl);
    size_t templates = 0, homs = 0, flat = 0, failures = 0, count_mismatch = 0;
    for (size_t n = 1; n <= 4; ++n)
        for (auto & h : oracle::labelled_reflexive_tournaments(n)) {
            ++templates;
            oracle::Adj ha(h);
            size_t here = 0;
            oracle::backtrack(ca, ha, [](auto, auto) { return true; }, [&](const oracle::Map & f) {
                ++here;
                if (f[0] == f[1] && f[1] == f[2]) {
                    ++flat;
                    failures += ! oracle::is_constant(f);
                }
                return false;
            });
            homs += here;
            size_t library = 0;
            for_each_homomorphism(build_cyl(3).digraph, h, {}, [&](const VertexMap &) {
                ++library;
                return true;
            });
            count_mismatch += library != here;
        }
    return {failures == 0 && count_mismatch == 0,
        std::to_string(templates) + " labelled tournaments, " + std::to_string(homs) + " homomorphisms, "
            + std::to_string(flat) + " constant on the bottom, " + std::to_string(failures)
            + " not globally constant; library count mismatches " + std::to_string(count_mismatch)};
}

auto full_spill() -> Result
{
    auto t4 = bundled_digraph("T4");
    vector<std::pair<Digraph, vector<Vertex>>> cases{{t4, {0, 1, 2}}};
    auto t4_code = oracle::canonical(t4);
    for (size_t n = 4; n <= 5 && cases.size() < 3; ++n)
        for (auto & h : oracle::reflexive_tournaments_up_to_iso(n)) {
            if (cases.size() == 3 || oracle::canonical(h) == t4_code)
                continue;
            oracle::Adj a(h);
            for (Vertex x = 0; x < n; ++x)
                for (Vertex y = 0; y < n; ++y)
                    for (Vertex z = 0; z < n; ++z)
                        if (cases.size() < 3 && x < y && x < z && y != z && a(x, y) && a(y, z) && a(z, x)
                            && oracle::retracts_to(h, {x, y, z})
                            && (cases.empty() || ! (cases.back().first == h)))
                            cases.emplace_back(h, vector<Vertex>{x, y, z});
        }
    size_t full = 0;
    string detail;
    for (auto & [h, c] : cases) {
        auto reference = oracle::spill(h, c);
        auto cert = spill(h, c, HamiltonCycle{c});
        bool agree = cert.spill == reference && verify_spill_certificate(h, cert);
        full += agree && reference.size() == h.size();
        detail += (detail.empty() ? "" : "; ") + std::to_string(h.size()) + "-vertex: oracle spill "
            + std::to_string(reference.size()) + "/" + std::to_string(h.size()) + ", library agrees " + yes(agree);
    }
    return {cases.size() == 3 && full == 3, detail};
}

auto figures() -> Result
{
    auto search = search_figure_tournaments();
    std::set<uint32_t> lib_one, lib_full, ref_one, ref_full;
    for (auto & c : search.one_way)
        lib_one.insert(c.bits);
    for (auto & c : search.full_spill)
        lib_full.insert(c.bits);
    vector<Vertex> left{0, 1, 2}, right{3, 4, 5};
    bool tournaments_ok = true;
    for (uint32_t bits = 0; bits < 512; ++bits) {
        auto h = cross_orientation(bits);
        oracle::Adj a(h);
        // Independent statement of the orientation convention.
        for (Vertex l = 0; l < 3; ++l)
            for (Vertex r = 3; r < 6; ++r)
                tournaments_ok = tournaments_ok && a(r, l) == bool(bits >> (3 * l + r - 3) & 1) && a(l, r) != a(r, l);
        bool to_right = oracle::retracts_to(h, right), to_left = oracle::retracts_to(h, left);
        if (to_right && ! to_left) {
            bool carried = false;
            for (auto & f : oracle::endomorphisms(h)) {
                vector<Vertex> image{f[0], f[1], f[2]};
                std::sort(image.begin(), image.end());
                carried = carried || image == right;
            }
            if (! carried)
                ref_one.insert(bits);
        }
        if (! to_left && oracle::spill(h, {0, 1, 2}).size() == 6)
            ref_full.insert(bits);
    }
    bool ok = tournaments_ok && ! ref_one.empty() && ! ref_full.empty() && lib_one == ref_one && lib_full == ref_full;
    return {ok, "oracle: " + std::to_string(ref_one.size()) + " one-way, " + std::to_string(ref_full.size())
            + " full-spill orientations; library sets equal " + yes(lib_one == ref_one && lib_full == ref_full)};
}

auto random_instance(const Digraph & base, size_t extra, double density, std::mt19937 & rng) -> RetractionInstance
{
    auto n = base.size() + extra;
    auto edges = base.edges();
    std::bernoulli_distribution coin(density);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if ((u >= base.size() || v >= base.size()) && coin(rng))
                edges.emplace_back(u, v);
    vector<Vertex> id(base.size());
    std::iota(id.begin(), id.end(), Vertex{0});
    return {Digraph(n, std::move(edges)), VertexMap(n, id)};
}

struct Tally {
    size_t cases = 0, yes = 0, mismatches = 0, largest = 0;
    auto text(const string & name) const -> string
    {
        return name + ": " + std::to_string(cases) + " cases, " + std::to_string(yes) + " yes, "
            + std::to_string(mismatches) + " mismatches, largest target " + std::to_string(largest);
    }
};

// Target side: the library's exact solver (checked against the oracle in
// criterion 10); any witness is re-checked with oracle predicates.
auto check_target(const ReductionInstance & r, bool source, Tally & t) -> void
{
    ++t.cases;
    t.yes += source;
    t.largest = std::max(t.largest, r.digraph.size());
    oracle::Adj g(r.digraph), h(r.claim.target_template);
    bool target;
    if (r.claim.target_problem == Problem::Retraction) {
        auto f = find_retraction(RetractionInstance{r.digraph, *r.embedding}, r.claim.target_template);
        target = f.has_value();
        if (f) {
            bool fixes = true;
            for (Vertex a = 0; a < r.embedding->domain_size(); ++a)
                fixes = fixes && f->image[(*r.embedding)(a)] == a;
            target = oracle::is_hom(g, h, f->image) && fixes;
        }
    }
    else {
        auto f = find_surjective_homomorphism(r.digraph, r.claim.target_template);
        target = f && oracle::is_hom(g, h, f->image) && oracle::is_onto(f->image, h.n);
    }
    t.mismatches += source != target;
}

auto source_retracts(const RetractionInstance & g, const Digraph & h) -> bool
{
    return oracle::retracts(g.graph, h, g.embedding.image);
}

auto cycle_of(const Digraph & h, const vector<Vertex> & s) -> HamiltonCycle
{
    HamiltonCycle c;
    for (auto a : hamilton_cycle(induced_subgraph(h, s)).order)
        c.order.push_back(s[a]);
    return c;
}

auto subsets(size_t n) -> vector<vector<Vertex>>
{
    vector<vector<Vertex>> out;
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        vector<Vertex> s;
        for (Vertex v = 0; v < n; ++v)
            if (mask >> v & 1)
                s.push_back(v);
        out.push_back(s);
    }
    return out;
}

auto reductions() -> Result
{
    std::mt19937 rng(5151);
    Tally base1, base2, comps, connect, gen1, gen2;

    vector<std::pair<Digraph, vector<Vertex>>> b1, b2;
    for (size_t n = 4; n <= 5; ++n)
        for (auto & h : oracle::reflexive_tournaments_up_to_iso(n))
            for (auto & s : subsets(n)) {
                if (s.size() < 3 || s.size() == n || ! is_strongly_connected(induced_subgraph(h, s)))
                    continue;
                auto sub = induced_subgraph(h, s);
                if (! oracle::endo_trivial(sub))
                    continue;
                if (oracle::retracts_to(h, s))
                    b1.emplace_back(h, s);
                else if (is_pair_endo_trivial(h, s).holds && oracle::spill(h, cycle_of(h, s).order).size() == n)
                    b2.emplace_back(h, s);
            }
    for (size_t t = 0; t < 60; ++t) {
        auto & [h, s] = b1[t % b1.size()];
        auto sub = induced_subgraph(h, s);
        auto g = random_instance(sub, 1 + t % 3, 0.25 + 0.1 * (t % 4), rng);
        check_target(reduce_base_case_I(g, h, s, cycle_of(h, s)), source_retracts(g, sub), base1);
    }
    for (size_t t = 0; t < 60 && ! b2.empty(); ++t) {
        auto & [h, s] = b2[t % b2.size()];
        auto g = random_instance(h, 1, 0.2 + 0.2 * (t % 4), rng);
        check_target(reduce_base_case_II(g, h, s, cycle_of(h, s)), source_retracts(g, h), base2);
    }

    vector<std::pair<Digraph, size_t>> split;
    for (size_t n = 3; n <= 5; ++n)
        for (auto & h : oracle::reflexive_tournaments_up_to_iso(n)) {
            auto parts = strong_components(h);
            for (size_t i = 0; i < parts.size() && parts.size() > 1; ++i)
                if (parts[i].size() > 1)
                    split.emplace_back(h, i);
        }
    for (size_t t = 0; t < 60; ++t) {
        auto & [h, i] = split[t % split.size()];
        auto part = induced_subgraph(h, strong_components(h)[i]);
        Digraph g;
        do {
            g = t % 2 == 0 ? random_instance(part, 1 + t % (6 - part.size()), 0.2, rng).graph
                           : random_instance(Digraph(0, {}), 2 + t % 5, 0.35, rng).graph;
        } while (! is_strongly_connected(g));
        check_target(reduce_components(g, h, i), oracle::surjective(g, part), comps);
    }

    vector<Digraph> hosts{bundled_digraph("DC3*"), bundled_digraph("T4")};
    for (auto & h : oracle::reflexive_tournaments_up_to_iso(5))
        if (is_strongly_connected(h) && hosts.size() < 6)
            hosts.push_back(h);
    for (size_t t = 0; t < 60; ++t) {
        auto & h = hosts[t % hosts.size()];
        auto g = random_instance(h, 1 + t % (7 - h.size()), 0.15 + 0.1 * (t % 3), rng);
        check_target(make_strongly_connected(g, h), source_retracts(g, h), connect);
    }

    // 2-link chains found by search over 6-vertex tournaments.
    std::optional<std::pair<Digraph, HardnessChain>> chain1, chain2;
    for (auto & h : oracle::reflexive_tournaments_up_to_iso(6)) {
        if (chain1 && chain2)
            break;
        if (! is_strongly_connected(h))
            continue;
        for (auto & h1 : subsets(6)) {
            if (h1.size() < 4 || h1.size() == 6)
                continue;
            for (auto & h0 : subsets(6)) {
                if (h0.size() < 3 || h0.size() >= h1.size() || ! std::includes(h1.begin(), h1.end(), h0.begin(), h0.end()))
                    continue;
                for (auto terminal : {ChainTerminal::GeneralI, ChainTerminal::GeneralII}) {
                    auto & slot = terminal == ChainTerminal::GeneralI ? chain1 : chain2;
                    if (slot)
                        continue;
                    try {
                        slot = std::pair{h, build_chain(h, {h0, h1}, terminal)};
                    }
                    catch (const Error &) {
                    }
                }
            }
        }
    }
    if (chain1) {
        auto & [h, chain] = *chain1;
        auto top = induced_subgraph(h, chain.hosts[1]);
        for (size_t t = 0; t < 8; ++t) {
            auto g = random_instance(top, t % 2, 0.3 + 0.2 * (t % 3), rng);
            check_target(reduce_general_I(chain, h, g), source_retracts(g, top), gen1);
        }
    }
    if (chain2) {
        auto & [h, chain] = *chain2;
        for (size_t t = 0; t < 8; ++t) {
            auto g = random_instance(h, t % 2, 0.2 + 0.2 * (t % 3), rng);
            check_target(reduce_general_II(chain, h, g), source_retracts(g, h), gen2);
        }
    }
    bool ok = base1.cases >= 50 && base2.cases >= 50 && comps.cases >= 50 && connect.cases >= 50 && gen1.cases > 0
        && gen2.cases > 0;
    for (auto * t : {&base1, &base2, &comps, &connect, &gen1, &gen2})
        ok = ok && t->mismatches == 0;
    return {ok, base1.text("base I") + "; " + base2.text("base II") + "; " + comps.text("components") + "; "
            + connect.text("connectify") + "; " + gen1.text("general I, 2 links") + "; "
            + gen2.text("general II, 2 links")};
}

auto dichotomy() -> Result
{
    size_t total = 0, wrong = 0, chains = 0, count_mismatch = 0;
    for (size_t n = 1; n <= 5; ++n) {
        auto reference = oracle::reflexive_tournaments_up_to_iso(n);
        count_mismatch += reference.size() != reflexive_tournaments(n).size();
        if (n == 1)
            continue;
        for (auto & h : reference) {
            ++total;
            auto c = classify_reflexive_tournament(h);
            bool ok = (c.verdict == Verdict::TractableTransitive) == oracle::is_transitive(h);
            if (c.verdict == Verdict::NPCompleteNonTransitive) {
                ok = ok && c.chain && verify_classification(h, c);
                chains += c.chain.has_value();
            }
            if (c.verdict == Verdict::TractableTransitive)
                ok = ok && verify_classification(h, c);
            wrong += ! ok;
        }
    }
    return {wrong == 0 && count_mismatch == 0,
        std::to_string(total) + " tournaments on 2-5 vertices, " + std::to_string(chains) + " re-verified chains, "
            + std::to_string(wrong) + " disagreements; library generation count mismatches "
            + std::to_string(count_mismatch)};
}

auto endo_retract() -> Result
{
    size_t total = 0, wrong = 0, trivial = 0;
    for (size_t n = 1; n <= 6; ++n)
        for (auto & h : oracle::reflexive_tournaments_up_to_iso(n)) {
            ++total;
            bool endo = oracle::endo_trivial(h);
            bool retract = oracle::retract_trivial(h);
            trivial += endo;
            wrong += endo != retract || is_endo_trivial(h).holds != endo || is_retract_trivial(h).holds != retract;
        }
    return {wrong == 0, std::to_string(total) + " tournaments on 1-6 vertices, " + std::to_string(trivial)
            + " endo-trivial, " + std::to_string(wrong) + " disagreements"};
}

auto solvers() -> Result
{
    vector<Digraph> small;
    for (size_t n = 1; n <= 3; ++n) {
        size_t pairs = n * n;
        for (uint32_t bits = 0; bits < (1u << pairs); ++bits) {
            vector<Edge> e;
            for (uint32_t i = 0; i < pairs; ++i)
                if (bits >> i & 1)
                    e.emplace_back(i / n, i % n);
            small.emplace_back(n, e);
        }
    }
    size_t pairs = 0, calls = 0, wrong = 0;
    auto compare = [&](const std::optional<oracle::Map> & first, const std::optional<VertexMap> & found) {
        ++calls;
        wrong += first.has_value() != found.has_value() || (found && found->image != *first);
    };
    for (auto & g : small)
        for (auto & h : small) {
            ++pairs;
            oracle::Adj ga(g), ha(h);
            std::optional<oracle::Map> hom, surj, compact, strict, listed;
            ListAssignment lists;
            for (Vertex v = 0; v < g.size(); ++v) {
                lists.lists.emplace_back();
                for (Vertex x = 0; x < h.size(); ++x)
                    if ((v * 7 + x * 3 + pairs) % 4 != 0)
                        lists.lists.back().push_back(x);
            }
            // Full-map enumeration in lexicographic order; first hits.
            oracle::for_each_map(g.size(), h.size(), [&](const oracle::Map & f) {
                if (! oracle::is_hom(ga, ha, f))
                    return false;
                if (! hom)
                    hom = f;
                bool onto = oracle::is_onto(f, h.size());
                bool covers = oracle::is_edge_onto(ga, ha, f);
                if (! surj && onto)
                    surj = f;
                if (! compact && covers)
                    compact = f;
                if (! strict && covers && onto)
                    strict = f;
                bool in_lists = true;
                for (Vertex v = 0; v < g.size(); ++v)
                    in_lists = in_lists
                        && std::find(lists.lists[v].begin(), lists.lists[v].end(), f[v]) != lists.lists[v].end();
                if (! listed && in_lists)
                    listed = f;
                return false;
            });
            compare(hom, find_homomorphism(g, h));
            compare(surj, find_surjective_homomorphism(g, h));
            compare(compact, find_compaction(g, h, CompactionMode::EdgeSurjective));
            compare(strict, find_compaction(g, h, CompactionMode::Strict));
            compare(listed, find_list_homomorphism(g, h, lists));

            // Retraction instances: every injective map of h into g that is an
            // induced embedding.
            if (h.size() > g.size())
                continue;
            oracle::for_each_map(h.size(), g.size(), [&](const oracle::Map & e) {
                if (! oracle::is_permutation(e) && std::set<Vertex>(e.begin(), e.end()).size() != e.size())
                    return false;
                for (Vertex a = 0; a < h.size(); ++a)
                    for (Vertex b = 0; b < h.size(); ++b)
                        if (ha(a, b) != ga(e[a], e[b]))
                            return false;
                std::optional<oracle::Map> r;
                oracle::for_each_map(g.size(), h.size(), [&](const oracle::Map & f) {
                    for (Vertex a = 0; a < h.size(); ++a)
                        if (f[e[a]] != a)
                            return false;
                    if (oracle::is_hom(ga, ha, f))
                        r = f;
                    return r.has_value();
                });
                compare(r, find_retraction(RetractionInstance{g, VertexMap(g.size(), e)}, h));
                return false;
            });
        }
    return {wrong == 0, std::to_string(pairs) + " pairs, " + std::to_string(calls) + " solver calls, "
            + std::to_string(wrong) + " disagreements with full-map enumeration"};
}

struct Criterion {
    int number;
    const char * name;
    double budget_seconds;
    Result (*run)();
};

} // namespace

int main()
{
    const Criterion criteria[] = {
        {1, "WNU table of Hg", 1, wnu_table},
        {2, "essential unarity of DC3*", 60, essential_unarity},
        {3, "gadget top maps are rotations", 60, dagger},
        {4, "collapse of Cyl_3", 300, collapse},
        {5, "full spill", 60, full_spill},
        {6, "figure tournaments", 300, figures},
        {7, "reduction soundness", 900, reductions},
        {8, "dichotomy agreement", 600, dichotomy},
        {9, "endo-trivial iff retract-trivial", 600, endo_retract},
        {10, "solvers against enumeration", 300, solvers},
    };
    int failures = 0;
    for (auto & c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Result r{false, ""};
        try {
            r = c.run();
        }
        catch (const std::exception & e) {
            r = {false, string("exception: ") + e.what()};
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool passed = r.passed && seconds <= c.budget_seconds;
        failures += ! passed;
        std::printf("%s criterion %2d (%s) %.2fs/%gs: %s\n", passed ? "PASS" : "FAIL", c.number, c.name, seconds,
            c.budget_seconds, r.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
