#include "../oracle.hpp"

#include <surjhom/catalogue.hpp>
#include <surjhom/error.hpp>
#include <surjhom/gadget.hpp>

#include <doctest.h>

#include <algorithm>

using namespace surjhom;

TEST_CASE("Cyl_m matches an independent construction")
{
    for (std::size_t m = 2; m <= 5; ++m) {
        auto cyl = build_cyl(m);
        CHECK(cyl.digraph.same_structure(oracle::cylinder(m)));
        CHECK(cyl.bottom.size() == m);
        CHECK(cyl.top.front() == cyl.vertex(0, m - 1));
    }
    CHECK(build_cyl(3).digraph.edge_count() == 30);
    CHECK(build_cyl(4).digraph.edge_count() == 56);
    CHECK_THROWS_AS(build_cyl(1), Error);
}

TEST_CASE("top maps are the rotations")
{
    for (std::size_t m = 3; m <= 5; ++m) {
        auto r = verify_dagger(m);
        CHECK(r.holds);
        CHECK(r.top_maps.size() == m);
    }
    // DC2* is complete, so every top map occurs.
    auto two = verify_dagger(2);
    CHECK_FALSE(two.holds);
    CHECK(two.top_maps.size() == 4);
}

TEST_CASE("rotation shift")
{
    CHECK(rotation_shift(VertexMap(3, {1, 2, 0})) == std::optional<std::size_t>{1});
    CHECK_FALSE(rotation_shift(VertexMap(3, {1, 0, 2})).has_value());
}

TEST_CASE("F glues the bottom cycle onto H")
{
    auto h = bundled_digraph("T4");
    std::vector<Vertex> s{0, 1, 2};
    auto c = hamilton_cycle(induced_subgraph(h, s));
    auto f = build_F(h, s, c);
    CHECK(f.digraph.size() == 4 + 9 - 3);
    REQUIRE(f.gadgets.size() == 1);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(f.gadgets[0].cells[i] == c.order[i]);
}

TEST_CASE("bad subsets and cycles are refused")
{
    auto h = bundled_digraph("T4");
    CHECK_THROWS_AS(check_sub_cycle(h, std::vector<Vertex>{0, 1, 2}, HamiltonCycle{{0, 2, 1}}), Error);
    CHECK_THROWS_AS(check_sub_cycle(h, std::vector<Vertex>{0, 0, 1}, HamiltonCycle{{0, 1}}), Error);
    CHECK_THROWS_AS(check_sub_cycle(h, std::vector<Vertex>{0, 9}, HamiltonCycle{{0, 9}}), Error);
}

TEST_CASE("spill sets match the oracle")
{
    for (auto & h : oracle::reflexive_tournaments_up_to_iso(5))
        for (Vertex a = 0; a < 5; ++a)
            for (Vertex b = a + 1; b < 5; ++b)
                for (Vertex c = b + 1; c < 5; ++c) {
                    std::vector<Vertex> s{a, b, c};
                    auto sub = induced_subgraph(h, s);
                    if (! is_strongly_connected(sub))
                        continue;
                    HamiltonCycle cycle;
                    for (auto x : hamilton_cycle(sub).order)
                        cycle.order.push_back(s[x]);
                    auto cert = spill(h, s, cycle);
                    CHECK(cert.spill == oracle::spill(h, cycle.order));
                    CHECK(verify_spill_certificate(h, cert));
                    auto positions = positional_spill(h, s, cycle);
                    std::vector<Vertex> joined;
                    for (auto & p : positions)
                        joined.insert(joined.end(), p.begin(), p.end());
                    std::sort(joined.begin(), joined.end());
                    joined.erase(std::unique(joined.begin(), joined.end()), joined.end());
                    CHECK(joined == cert.spill);
                }
}

TEST_CASE("tampered spill certificates fail")
{
    auto h = bundled_digraph("T4");
    std::vector<Vertex> s{0, 1, 2};
    auto c = hamilton_cycle(induced_subgraph(h, s));
    auto cert = spill(h, s, c);
    REQUIRE(verify_spill_certificate(h, cert));
    auto bad = cert;
    bad.witnesses.front().y = bad.witnesses.back().y;
    CHECK_FALSE(verify_spill_certificate(h, bad));
    bad = cert;
    bad.spill.pop_back();
    CHECK_FALSE(verify_spill_certificate(h, bad));
}
