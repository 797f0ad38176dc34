#include <surjhom/error.hpp>
#include <surjhom/generate.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace surjhom {

using std::size_t;
using std::uint64_t;
using std::vector;

namespace {
    constexpr size_t max_code_vertices = 8;

    auto check_codable(size_t n) -> void
    {
        if (n > max_code_vertices)
            size_bound_exceeded("adjacency codes need at most 8 vertices, got " + std::to_string(n), max_code_vertices);
    }

    // Recursively permutes each block of same-invariant vertices; positions
    // holds, for every block, the target slots its members may occupy.
    auto minimise(const Digraph & g, const vector<vector<Vertex>> & blocks, size_t block, vector<Vertex> & slot,
        uint64_t & best) -> void
    {
        auto n = g.size();
        if (block == blocks.size()) {
            uint64_t code = 0;
            for (auto & [u, v] : g.edges())
                code |= uint64_t{1} << (slot[u] * n + slot[v]);
            best = std::min(best, code);
            return;
        }
        auto members = blocks[block];
        Vertex base = 0;
        for (size_t b = 0; b < block; ++b)
            base += static_cast<Vertex>(blocks[b].size());
        std::sort(members.begin(), members.end());
        do {
            for (size_t i = 0; i < members.size(); ++i)
                slot[members[i]] = base + static_cast<Vertex>(i);
            minimise(g, blocks, block + 1, slot, best);
        } while (std::next_permutation(members.begin(), members.end()));
    }
}

auto adjacency_code(const Digraph & g) -> uint64_t
{
    check_codable(g.size());
    uint64_t code = 0;
    for (auto & [u, v] : g.edges())
        code |= uint64_t{1} << (u * g.size() + v);
    return code;
}

auto from_adjacency_code(size_t n, uint64_t code) -> Digraph
{
    check_codable(n);
    vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (code >> (u * n + v) & 1)
                edges.emplace_back(u, v);
    return Digraph(n, std::move(edges));
}

auto canonical_code(const Digraph & g) -> uint64_t
{
    check_codable(g.size());
    // Only relabellings that sort vertices by an isomorphism invariant are
    // tried; the minimum over them is still a canonical code.
    using Key = std::tuple<size_t, size_t, bool>;
    std::map<Key, vector<Vertex>> classes;
    for (Vertex v = 0; v < g.size(); ++v) {
        bool loop = g.has_loop(v);
        classes[{g.out_degree(v) - loop, g.in_degree(v) - loop, loop}].push_back(v);
    }
    vector<vector<Vertex>> blocks;
    for (auto & [key, members] : classes)
        blocks.push_back(members);
    vector<Vertex> slot(g.size());
    uint64_t best = ~uint64_t{0};
    minimise(g, blocks, 0, slot, best);
    return g.size() == 0 ? 0 : best;
}

auto canonical_form(const Digraph & g) -> Digraph
{
    return from_adjacency_code(g.size(), canonical_code(g));
}

auto for_each_labelled_digraph(size_t n, const std::function<void(const Digraph &)> & visit) -> void
{
    if (n * n > 20)
        size_bound_exceeded("labelled digraph enumeration on " + std::to_string(n) + " vertices", 4);
    uint64_t total = uint64_t{1} << (n * n);
    for (uint64_t code = 0; code < total; ++code)
        visit(from_adjacency_code(n, code));
}

auto for_each_labelled_tournament(size_t n, bool reflexive, const std::function<void(const Digraph &)> & visit)
    -> void
{
    vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    if (pairs.size() > 24)
        size_bound_exceeded("labelled tournament enumeration on " + std::to_string(n) + " vertices", 7);
    uint64_t total = uint64_t{1} << pairs.size();
    for (uint64_t bits = 0; bits < total; ++bits) {
        vector<Edge> edges;
        for (size_t i = 0; i < pairs.size(); ++i) {
            auto [u, v] = pairs[i];
            if (bits >> i & 1)
                edges.emplace_back(v, u);
            else
                edges.emplace_back(u, v);
        }
        if (reflexive)
            for (Vertex v = 0; v < n; ++v)
                edges.emplace_back(v, v);
        visit(Digraph(n, std::move(edges)));
    }
}

auto reflexive_tournaments(size_t n) -> vector<Digraph>
{
    check_codable(n);
    std::set<uint64_t> layer;
    if (n == 0)
        return {Digraph(0)};
    layer.insert(adjacency_code(complete_digraph(1, true)));
    for (size_t k = 2; k <= n; ++k) {
        std::set<uint64_t> next;
        for (auto code : layer) {
            auto base = from_adjacency_code(k - 1, code);
            auto fresh = static_cast<Vertex>(k - 1);
            for (uint64_t bits = 0; bits < (uint64_t{1} << (k - 1)); ++bits) {
                auto edges = base.edges();
                edges.emplace_back(fresh, fresh);
                for (Vertex u = 0; u < fresh; ++u)
                    if (bits >> u & 1)
                        edges.emplace_back(fresh, u);
                    else
                        edges.emplace_back(u, fresh);
                next.insert(canonical_code(Digraph(k, std::move(edges))));
            }
        }
        layer = std::move(next);
    }
    vector<Digraph> result;
    for (auto code : layer)
        result.push_back(from_adjacency_code(n, code));
    return result;
}

auto digraphs_up_to_isomorphism(size_t n, bool reflexive) -> vector<Digraph>
{
    check_codable(n);
    if (n > 5)
        size_bound_exceeded("isomorphism-class enumeration of digraphs on " + std::to_string(n) + " vertices", 5);
    std::set<uint64_t> layer{0};
    for (size_t k = 1; k <= n; ++k) {
        std::set<uint64_t> next;
        auto fresh = static_cast<Vertex>(k - 1);
        auto arcs = 2 * (k - 1);
        for (auto code : layer) {
            auto base = from_adjacency_code(k - 1, code);
            for (uint64_t bits = 0; bits < (uint64_t{1} << arcs); ++bits)
                for (int loop = reflexive ? 1 : 0; loop <= 1; ++loop) {
                    auto edges = base.edges();
                    if (loop)
                        edges.emplace_back(fresh, fresh);
                    for (Vertex u = 0; u < fresh; ++u) {
                        if (bits >> (2 * u) & 1)
                            edges.emplace_back(u, fresh);
                        if (bits >> (2 * u + 1) & 1)
                            edges.emplace_back(fresh, u);
                    }
                    next.insert(canonical_code(Digraph(k, std::move(edges))));
                }
        }
        layer = std::move(next);
    }
    vector<Digraph> result;
    for (auto code : layer)
        result.push_back(from_adjacency_code(n, code));
    return result;
}

} // namespace surjhom
