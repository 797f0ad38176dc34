#include "../oracle.hpp"

#include <surjhom/catalogue.hpp>
#include <surjhom/endo.hpp>
#include <surjhom/error.hpp>

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace surjhom;

TEST_CASE("endomorphism monoid of DC3*")
{
    auto h = bundled_digraph("DC3*");
    auto monoid = endomorphisms(h);
    auto reference = oracle::endomorphisms(h);
    REQUIRE(monoid.size() == reference.size());
    CHECK(monoid.size() == 6);
    CHECK(monoid.automorphism_count() == 3);
    CHECK(monoid.constant_count() == 3);
    CHECK(monoid.nontrivial_count() == 0);
    for (std::size_t i = 0; i < reference.size(); ++i)
        CHECK(monoid.elements[i].map.image == reference[i]);
}

TEST_CASE("endomorphism counts match the oracle on 4-vertex tournaments")
{
    for (auto & h : oracle::labelled_reflexive_tournaments(4)) {
        auto monoid = endomorphisms(h);
        CHECK(monoid.size() == oracle::endomorphisms(h).size());
        CHECK(is_endo_trivial(h).holds == oracle::endo_trivial(h));
        CHECK(is_retract_trivial(h).holds == oracle::retract_trivial(h));
    }
}

TEST_CASE("counterexamples are non-trivial endomorphisms")
{
    auto h = transitive_tournament(3, true);
    auto v = is_endo_trivial(h);
    REQUIRE_FALSE(v.holds);
    REQUIRE(v.counterexample.has_value());
    CHECK(is_homomorphism(h, h, *v.counterexample));
    CHECK_FALSE(v.counterexample->is_constant());
    CHECK_FALSE(v.counterexample->is_bijective());
}

TEST_CASE("retractions are idempotent endomorphisms")
{
    for (auto & h : oracle::reflexive_tournaments_up_to_iso(4)) {
        std::size_t expected = 0;
        for (auto & f : oracle::endomorphisms(h)) {
            bool idempotent = true;
            for (auto x : f)
                idempotent = idempotent && f[x] == x;
            expected += idempotent;
        }
        auto rs = retractions(h);
        CHECK(rs.size() == expected);
        for (auto & r : rs)
            CHECK(compose(r, r) == r);
    }
}

TEST_CASE("pair endo-triviality matches a direct check")
{
    for (auto & h : oracle::reflexive_tournaments_up_to_iso(5))
        for (Vertex a = 0; a < 5; ++a)
            for (Vertex b = a + 1; b < 5; ++b)
                for (Vertex c = b + 1; c < 5; ++c) {
                    std::vector<Vertex> s{a, b, c};
                    bool setwise = true, pointwise = true;
                    for (auto & f : oracle::endomorphisms(h)) {
                        std::set<Vertex> image{f[a], f[b], f[c]};
                        if (image == std::set<Vertex>{a, b, c})
                            setwise = setwise && oracle::is_permutation(f);
                        if (f[a] == a && f[b] == b && f[c] == c)
                            pointwise = pointwise && oracle::is_permutation(f);
                    }
                    CHECK(is_pair_endo_trivial(h, s).holds == setwise);
                    CHECK(is_pair_endo_trivial(h, s, FixMode::Pointwise).holds == pointwise);
                }
}

TEST_CASE("self-map digraph of DC2*")
{
    auto h = bundled_digraph("DC2*");
    auto full = self_map_digraph(h);
    CHECK(full.digraph.size() == 4);
    auto endo = endomorphism_digraph(h);
    REQUIRE(endo.monoid.has_value());
    CHECK(endo.digraph.size() == endo.monoid->size());
    for (auto [a, b] : full.digraph.edges())
        for (auto [x, y] : h.edges())
            CHECK(h.has_edge(full.maps[a](x), full.maps[b](y)));
}

TEST_CASE("currying a projection gives constant and identity maps")
{
    auto h = directed_cycle(3, true);
    auto product = direct_product(h, h);
    std::vector<Vertex> second(product.size());
    for (Vertex x = 0; x < 3; ++x)
        for (Vertex u = 0; u < 3; ++u)
            second[x * 3 + u] = u;
    auto c = curry(VertexMap(3, second), h, h);
    CHECK(c.lands_in_endomorphisms);
    for (auto & m : c.maps)
        CHECK(m.is_identity());
    std::vector<Vertex> bad(9, 0);
    bad[1] = 2;
    CHECK_THROWS_AS(curry(VertexMap(3, bad), h, h), Error);
}

TEST_CASE("homomorphic images follow the set partitions")
{
    auto h = directed_cycle(3, true);
    auto images = homomorphic_images(h);
    CHECK(images.size() == 5);
    for (auto & im : images)
        CHECK(is_homomorphism(h, im.image, im.quotient));
}
