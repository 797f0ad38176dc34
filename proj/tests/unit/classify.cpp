#include "../oracle.hpp"

#include <surjhom/catalogue.hpp>
#include <surjhom/classify.hpp>
#include <surjhom/error.hpp>
#include <surjhom/figures.hpp>

#include <doctest.h>

using namespace surjhom;

TEST_CASE("bundled templates get their verdicts")
{
    CHECK(classify_small_digraph(bundled_digraph("DC3*")).verdict == Verdict::NPCompleteNonTransitive);
    CHECK(classify_small_digraph(bundled_digraph("TT3*")).verdict == Verdict::TractableTransitive);
    CHECK(classify_small_digraph(bundled_digraph("K3*")).verdict == Verdict::TrivialSmall);
    CHECK(classify_small_digraph(bundled_digraph("Hg")).verdict == Verdict::WNUTractableCandidate);
    CHECK(classify_small_digraph(bundled_digraph("Hf")).verdict == Verdict::EssentiallyUnaryHard);
    CHECK(classify_small_digraph(bundled_digraph("DC3")).verdict == Verdict::WNUTractableCandidate);
    CHECK(classify_small_digraph(complete_digraph(3, false)).verdict == Verdict::NPCompleteSemicomplete);
    CHECK_THROWS_AS(classify_small_digraph(bundled_digraph("T4")), Error);
}

TEST_CASE("tournament verdicts follow transitivity")
{
    for (std::size_t n = 2; n <= 6; ++n)
        for (auto & h : oracle::reflexive_tournaments_up_to_iso(n)) {
            auto c = classify_reflexive_tournament(h);
            CHECK((c.verdict == Verdict::TractableTransitive) == oracle::is_transitive(h));
            CHECK(verify_classification(h, c));
        }
}

TEST_CASE("non-strongly-connected tournaments point at a component")
{
    // DC3* dominating a single vertex.
    Digraph h(4, {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}});
    auto c = classify_reflexive_tournament(h);
    CHECK(c.verdict == Verdict::NPCompleteNonTransitive);
    REQUIRE(c.component.has_value());
    CHECK(c.component->vertices == std::vector<Vertex>{0, 1, 2});
    CHECK(verify_classification(h, c));
}

TEST_CASE("forged witnesses fail re-verification")
{
    auto h = bundled_digraph("TT3*");
    auto c = classify_reflexive_tournament(h);
    c.median->table[1] = (c.median->table[1] + 1) % 3;
    CHECK_FALSE(verify_classification(h, c));
}

TEST_CASE("directed cycle counts")
{
    CHECK(count_directed_cycles(directed_cycle(3, false)) == 1);
    CHECK(count_directed_cycles(complete_digraph(3, false)) == 5);
    CHECK(count_directed_cycles(transitive_tournament(4, true)) == 0);
}

TEST_CASE("figure predicates on the catalogue entries")
{
    CHECK(check_one_way(bundled_digraph("T6-oneway")).holds());
    CHECK(check_full_spill(bundled_digraph("T6-fullspill")).holds());
    CHECK_FALSE(check_one_way(cross_orientation(0)).holds());
}
