#include "../oracle.hpp"

#include <surjhom/error.hpp>
#include <surjhom/generate.hpp>

#include <doctest.h>

using namespace surjhom;

TEST_CASE("edges are deduplicated and sorted")
{
    Digraph g(3, {{2, 0}, {0, 1}, {2, 0}, {1, 1}});
    CHECK(g.edge_count() == 3);
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 1}, {2, 0}});
    CHECK(g.has_loop(1));
    CHECK_FALSE(g.has_loop(0));
    CHECK(g.out_degree(2) == 1);
    CHECK(g.in_degree(1) == 2);
}

TEST_CASE("out of range endpoints are rejected")
{
    CHECK_THROWS_AS(Digraph(2, {{0, 2}}), Error);
    CHECK_THROWS_AS(Digraph(2, {}, {"a"}), Error);
}

TEST_CASE("tournament predicates")
{
    auto dc3 = directed_cycle(3, true);
    CHECK(is_reflexive_tournament(dc3));
    CHECK(is_strongly_connected(dc3));
    CHECK_FALSE(is_transitive_tournament(dc3));
    auto tt4 = transitive_tournament(4, true);
    CHECK(is_transitive_tournament(tt4));
    CHECK_FALSE(is_strongly_connected(tt4));
    CHECK(strong_components(tt4).size() == 4);
    CHECK(is_semicomplete(complete_digraph(3, false)));
    CHECK(has_double_edge(complete_digraph(3, false)));
    CHECK_FALSE(is_tournament(complete_digraph(3, false)));
}

TEST_CASE("strong components come in topological order")
{
    // 0 <-> 1 -> 2 <-> 3
    Digraph g(4, {{0, 1}, {1, 0}, {1, 2}, {2, 3}, {3, 2}});
    auto parts = strong_components(g);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == std::vector<Vertex>{0, 1});
    CHECK(parts[1] == std::vector<Vertex>{2, 3});
}

TEST_CASE("Hamilton cycles of strongly connected tournaments")
{
    for (std::size_t n = 3; n <= 6; ++n)
        for (auto & h : oracle::reflexive_tournaments_up_to_iso(n))
            if (is_strongly_connected(h)) {
                auto c = hamilton_cycle(h);
                CHECK(is_hamilton_cycle(h, c));
            }
    CHECK_THROWS_AS(hamilton_cycle(transitive_tournament(3, true)), Error);
}

TEST_CASE("tuple codec puts the last coordinate fastest")
{
    TupleCodec codec(3, 2);
    CHECK(codec.count() == 9);
    CHECK(codec.decode(1) == std::vector<Vertex>{0, 1});
    CHECK(codec.decode(3) == std::vector<Vertex>{1, 0});
    std::vector<Vertex> t{2, 1};
    CHECK(codec.encode(t) == 7);
}

TEST_CASE("direct power matches coordinatewise adjacency")
{
    auto h = directed_cycle(3, true);
    auto p = direct_power(h, 2);
    TupleCodec codec(3, 2);
    CHECK(p.size() == 9);
    for (std::size_t a = 0; a < 9; ++a)
        for (std::size_t b = 0; b < 9; ++b) {
            auto x = codec.decode(a), y = codec.decode(b);
            CHECK(p.has_edge(a, b) == (h.has_edge(x[0], y[0]) && h.has_edge(x[1], y[1])));
        }
}

TEST_CASE("induced subgraphs renumber by rank")
{
    auto h = transitive_tournament(4, true);
    std::vector<Vertex> s{1, 3};
    auto sub = induced_subgraph(h, s);
    CHECK(sub.size() == 2);
    CHECK(sub.has_edge(0, 1) == h.has_edge(1, 3));
    CHECK(sub.has_edge(1, 0) == h.has_edge(3, 1));
}

TEST_CASE("isomorphism agrees with the canonical form of the oracle")
{
    auto all = oracle::labelled_reflexive_tournaments(4);
    for (std::size_t i = 0; i < all.size(); i += 5)
        for (std::size_t j = 0; j < all.size(); j += 7)
            CHECK(are_isomorphic(all[i], all[j]) == (oracle::canonical(all[i]) == oracle::canonical(all[j])));
}

TEST_CASE("up-to-isomorphism generation matches the oracle")
{
    for (std::size_t n = 1; n <= 6; ++n)
        CHECK(reflexive_tournaments(n).size() == oracle::reflexive_tournaments_up_to_iso(n).size());
}

TEST_CASE("composition and inverse")
{
    VertexMap f(3, {1, 2, 0});
    auto g = inverse(f);
    CHECK(compose(f, g).is_identity());
    CHECK(compose(g, f).is_identity());
    CHECK(VertexMap::constant(4, 2, 3).is_constant());
    CHECK(VertexMap(3, {0, 0, 2}).image_set() == std::vector<Vertex>{0, 2});
}
