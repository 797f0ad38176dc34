#include "../oracle.hpp"

#include <surjhom/catalogue.hpp>
#include <surjhom/classify.hpp>
#include <surjhom/error.hpp>
#include <surjhom/reduction.hpp>

#include <doctest.h>

#include <numeric>
#include <random>

using namespace surjhom;

namespace {

auto extend(const Digraph & base, std::size_t extra, double p, std::mt19937 & rng) -> RetractionInstance
{
    auto n = base.size() + extra;
    auto e = base.edges();
    std::bernoulli_distribution coin(p);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if ((u >= base.size() || v >= base.size()) && coin(rng))
                e.emplace_back(u, v);
    std::vector<Vertex> id(base.size());
    std::iota(id.begin(), id.end(), Vertex{0});
    return {Digraph(n, e), VertexMap(n, id)};
}

auto surjects(const ReductionInstance & r) -> bool
{
    return find_surjective_homomorphism(r.digraph, r.claim.target_template).has_value();
}

}

TEST_CASE("base case I on T4")
{
    auto h = bundled_digraph("T4");
    std::vector<Vertex> h0{0, 1, 2};
    auto c = hamilton_cycle(induced_subgraph(h, h0));
    auto sub = induced_subgraph(h, h0);
    std::mt19937 rng(3);
    for (int t = 0; t < 20; ++t) {
        auto g = extend(sub, 1 + t % 2, 0.4, rng);
        auto r = reduce_base_case_I(g, h, h0, c);
        CHECK(r.claim.target_problem == Problem::SurjectiveColouring);
        CHECK(r.gadgets.size() == g.graph.size() - 3 + 1);
        CHECK(surjects(r) == oracle::retracts(g.graph, sub, g.embedding.image));
    }
}

TEST_CASE("provenance covers every output vertex")
{
    auto h = bundled_digraph("T4");
    std::vector<Vertex> h0{0, 1, 2};
    auto c = hamilton_cycle(induced_subgraph(h, h0));
    std::mt19937 rng(4);
    auto g = extend(induced_subgraph(h, h0), 2, 0.5, rng);
    auto r = reduce_base_case_I(g, h, h0, c);
    REQUIRE(r.provenance.size() == r.digraph.size());
    for (auto & p : r.provenance)
        CHECK((p.source || p.template_vertex || p.gadget || p.path));
}

TEST_CASE("base case II refuses a template without full spill")
{
    auto h = transitive_tournament(4, true);
    std::mt19937 rng(5);
    auto g = extend(h, 1, 0.3, rng);
    CHECK_THROWS_AS(reduce_base_case_II(g, h, std::vector<Vertex>{0, 1, 2}, HamiltonCycle{{0, 1, 2}}), Error);
}

TEST_CASE("components reduction")
{
    // Strong components {0,1,2} (a 3-cycle) and {3}, with 3 beaten by all.
    Digraph h(4, {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}});
    auto parts = strong_components(h);
    REQUIRE(parts.size() == 2);
    std::size_t big = parts[0].size() == 3 ? 0 : 1;
    auto part = induced_subgraph(h, parts[big]);
    for (auto & g : {directed_cycle(3, false), directed_cycle(6, true), complete_digraph(2, true)}) {
        auto r = reduce_components(g, h, big);
        CHECK(surjects(r) == oracle::surjective(g, part));
    }
    CHECK_THROWS_AS(reduce_components(transitive_tournament(2, true), h, big), Error);
}

TEST_CASE("connectify keeps strongly connected inputs unchanged")
{
    auto h = directed_cycle(3, true);
    RetractionInstance g{h, VertexMap(3, {0, 1, 2})};
    auto r = make_strongly_connected(g, h);
    CHECK(r.digraph.same_structure(h));
}

TEST_CASE("connectify preserves retraction")
{
    auto h = bundled_digraph("DC3*");
    std::mt19937 rng(6);
    for (int t = 0; t < 20; ++t) {
        auto g = extend(h, 2, 0.2, rng);
        auto r = make_strongly_connected(g, h);
        CHECK(is_strongly_connected(r.digraph));
        REQUIRE(r.embedding.has_value());
        bool target = find_retraction(RetractionInstance{r.digraph, *r.embedding}, h).has_value();
        CHECK(target == oracle::retracts(g.graph, h, g.embedding.image));
    }
}

TEST_CASE("chains found by the classifier verify")
{
    for (std::size_t n = 3; n <= 6; ++n)
        for (auto & h : oracle::reflexive_tournaments_up_to_iso(n))
            if (is_strongly_connected(h)) {
                auto chain = find_hardness_chain(h);
                CHECK(verify_chain(chain, h));
            }
}

TEST_CASE("tampered chains fail verification")
{
    auto h = bundled_digraph("T4");
    auto chain = find_hardness_chain(h);
    REQUIRE(chain.terminal == ChainTerminal::BaseI);
    auto bad = chain;
    bad.sizes.front() += 1;
    CHECK_FALSE(verify_chain(bad, h));
    bad = chain;
    std::swap(bad.cycles.front().order[0], bad.cycles.front().order[1]);
    CHECK_FALSE(verify_chain(bad, h));
}

TEST_CASE("build_chain rejects a level that is not endo-trivial")
{
    auto h = bundled_digraph("T4");
    CHECK_THROWS_AS(build_chain(h, {{0, 1, 2, 3}}, ChainTerminal::BaseI), Error);
}

TEST_CASE("local indices")
{
    std::vector<Vertex> host{1, 4, 6, 9}, sub{6, 1};
    CHECK(local_indices(host, sub) == std::vector<Vertex>{2, 0});
}
