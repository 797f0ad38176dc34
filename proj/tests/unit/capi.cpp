#include <surjhom/surjhom.h>

#include <doctest.h>
#include <json.hpp>

#include <string>

using nlohmann::json;

namespace {

auto take(char * s) -> json
{
    REQUIRE(s != nullptr);
    auto j = json::parse(s);
    sh_string_free(s);
    return j;
}

struct Graph {
    sh_digraph * g = nullptr;
    explicit Graph(const char * source) { REQUIRE(sh_digraph_load(source, &g) == SH_OK); }
    ~Graph() { sh_digraph_free(g); }
};

}

TEST_CASE("loading and freeing")
{
    Graph h("bundled:DC3*");
    CHECK(sh_digraph_size(h.g) == 3);
    char * out = nullptr;
    REQUIRE(sh_digraph_json(h.g, &out) == SH_OK);
    CHECK(take(out)["edges"].size() == 6);
    sh_digraph_free(nullptr);
}

TEST_CASE("bad input maps to error codes")
{
    sh_digraph * g = nullptr;
    CHECK(sh_digraph_parse("{\"n\":2,\"edges\":[[0,7]]}", &g) == SH_INVALID_INPUT);
    CHECK(g == nullptr);
    CHECK(std::string(sh_last_error()).size() > 0);
    CHECK(sh_digraph_load("/nonexistent/file.json", &g) == SH_INVALID_INPUT);
    CHECK(sh_digraph_load("bundled:nope", &g) == SH_INVALID_INPUT);
}

TEST_CASE("parsing text")
{
    sh_digraph * g = nullptr;
    REQUIRE(sh_digraph_parse("3\n0 1\n1 2\n", &g) == SH_OK);
    CHECK(sh_digraph_size(g) == 3);
    sh_digraph_free(g);
}

TEST_CASE("solve reports witnesses and their absence")
{
    Graph h("bundled:DC3*"), g("bundled:DC6*"), small("bundled:DC2*");
    char * out = nullptr;
    REQUIRE(sh_solve("surj", h.g, g.g, nullptr, &out) == SH_OK);
    auto j = take(out);
    CHECK(j["exists"] == true);
    CHECK(j["witness"].size() == 6);
    out = nullptr;
    CHECK(sh_solve("surj", h.g, small.g, nullptr, &out) == SH_NO_WITNESS);
    CHECK(take(out)["exists"] == false);
    out = nullptr;
    CHECK(sh_solve("bogus", h.g, g.g, nullptr, &out) == SH_INVALID_INPUT);
    CHECK(sh_solve("retract", h.g, g.g, "[0,1]", &out) == SH_INVALID_INPUT);
}

TEST_CASE("polymorphism modes")
{
    Graph h("bundled:DC3*");
    char * out = nullptr;
    REQUIRE(sh_poly(h.g, 2, "enumerate", &out) == SH_OK);
    CHECK(take(out)["count"] == 9);
    out = nullptr;
    CHECK(sh_poly(h.g, 3, "wnu", &out) == SH_NO_WITNESS);
    take(out);
    out = nullptr;
    REQUIRE(sh_poly(h.g, 3, "essentially-unary", &out) == SH_OK);
    CHECK(take(out)["holds"] == true);
}

TEST_CASE("gadget and spill")
{
    char * out = nullptr;
    REQUIRE(sh_gadget_cyl(3, 1, &out) == SH_OK);
    auto j = take(out);
    CHECK(j["digraph"]["edges"].size() == 30);
    Graph t4("bundled:T4");
    out = nullptr;
    REQUIRE(sh_spill(t4.g, "[0,1,2]", nullptr, &out) == SH_OK);
    CHECK(take(out)["full"] == true);
}

TEST_CASE("classification")
{
    Graph h("bundled:DC3*");
    char * out = nullptr;
    REQUIRE(sh_classify(h.g, &out) == SH_OK);
    CHECK(take(out)["verdict"] == "NPCompleteNonTransitive");
    Graph big("bundled:DC5");
    out = nullptr;
    CHECK(sh_classify(big.g, &out) == SH_PRECONDITION);
}

TEST_CASE("reduction through the C interface")
{
    Graph h("bundled:T4"), g("bundled:DC3*");
    char * out = nullptr;
    REQUIRE(sh_reduce("base1", h.g, g.g, "{\"sub\":[0,1,2]}", &out) == SH_OK);
    auto j = take(out);
    CHECK(j["digraph"]["n"].get<int>() > 4);
    CHECK(j["claim"]["construction"].is_string());
}

TEST_CASE("size bound")
{
    Graph h("bundled:K8*");
    char * out = nullptr;
    REQUIRE(sh_set_size_bound(100) == SH_OK);
    CHECK(sh_poly(h.g, 3, "enumerate", &out) == SH_SIZE_BOUND);
    REQUIRE(sh_set_size_bound(1000000) == SH_OK);
}
