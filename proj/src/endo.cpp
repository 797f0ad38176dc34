#include <surjhom/endo.hpp>
#include <surjhom/error.hpp>
#include <surjhom/solver.hpp>

#include <algorithm>
#include <unordered_map>

namespace surjhom {

using std::size_t;
using std::vector;

namespace {
    auto self_map_count(size_t n) -> size_t
    {
        auto bound = limits().materialise;
        size_t total = 1;
        for (size_t i = 0; i < n; ++i) {
            if (total > bound / std::max<size_t>(n, 1))
                size_bound_exceeded("self-maps of a " + std::to_string(n) + "-vertex digraph", bound);
            total *= n;
        }
        return total;
    }

    auto classify(const Digraph & h, const VertexMap & f) -> Endomorphism
    {
        return Endomorphism{f, is_automorphism(h, f), f.is_constant()};
    }

    auto is_idempotent(const VertexMap & f) -> bool
    {
        for (auto v : f.image)
            if (f(v) != v)
                return false;
        return true;
    }

    auto fixes(const VertexMap & f, std::span<const Vertex> s, FixMode mode) -> bool
    {
        if (mode == FixMode::Pointwise)
            return std::all_of(s.begin(), s.end(), [&](Vertex v) { return f(v) == v; });
        vector<Vertex> want(s.begin(), s.end()), got;
        for (auto v : s)
            got.push_back(f(v));
        std::sort(want.begin(), want.end());
        want.erase(std::unique(want.begin(), want.end()), want.end());
        std::sort(got.begin(), got.end());
        got.erase(std::unique(got.begin(), got.end()), got.end());
        return want == got;
    }

    // Visits every g with (f(x), g(y)) ∈ E(g) for all edges (x, y): g(y) is
    // free within the common out-neighbourhood of the f-images of y's
    // in-neighbours.
    auto for_each_successor(const Digraph & g, const VertexMap & f, const std::function<void(const vector<Vertex> &)> & visit)
        -> void
    {
        auto n = g.size();
        vector<vector<Vertex>> allowed(n);
        for (Vertex y = 0; y < n; ++y) {
            vector<char> ok(n, 1);
            for (auto x : g.in(y)) {
                vector<char> here(n, 0);
                for (auto z : g.out(f(x)))
                    here[z] = 1;
                for (Vertex z = 0; z < n; ++z)
                    ok[z] = ok[z] && here[z];
            }
            for (Vertex z = 0; z < n; ++z)
                if (ok[z])
                    allowed[y].push_back(z);
            if (allowed[y].empty())
                return;
        }
        vector<size_t> at(n, 0);
        vector<Vertex> img(n);
        while (true) {
            for (size_t y = 0; y < n; ++y)
                img[y] = allowed[y][at[y]];
            visit(img);
            size_t y = n;
            while (y > 0) {
                --y;
                if (++at[y] < allowed[y].size())
                    break;
                at[y] = 0;
                if (y == 0)
                    return;
            }
            if (n == 0)
                return;
        }
    }
}

auto EndoMonoid::automorphism_count() const -> size_t
{
    return std::count_if(elements.begin(), elements.end(), [](auto & e) { return e.automorphism; });
}

auto EndoMonoid::constant_count() const -> size_t
{
    return std::count_if(elements.begin(), elements.end(), [](auto & e) { return e.constant; });
}

auto EndoMonoid::nontrivial_count() const -> size_t
{
    return std::count_if(elements.begin(), elements.end(), [](auto & e) { return ! e.trivial(); });
}

auto EndoMonoid::find(const VertexMap & f) const -> std::optional<size_t>
{
    auto it = std::lower_bound(elements.begin(), elements.end(), f, [](auto & e, auto & m) { return e.map < m; });
    if (it != elements.end() && it->map == f)
        return static_cast<size_t>(it - elements.begin());
    return std::nullopt;
}

auto is_automorphism(const Digraph & h, const VertexMap & f) -> bool
{
    if (f.domain_size() != h.size() || f.codomain_size != h.size() || ! f.is_bijective())
        return false;
    return is_homomorphism(h, h, f) && is_homomorphism(h, h, inverse(f));
}

auto endomorphisms(const Digraph & h) -> EndoMonoid
{
    self_map_count(h.size());
    EndoMonoid m;
    m.n = h.size();
    for_each_homomorphism(h, h, {}, [&](const VertexMap & f) {
        m.elements.push_back(classify(h, f));
        return true;
    });
    return m;
}

auto is_endo_trivial(const Digraph & h) -> TrivialityVerdict
{
    TrivialityVerdict verdict{true, std::nullopt};
    for_each_homomorphism(h, h, {}, [&](const VertexMap & f) {
        if (classify(h, f).trivial())
            return true;
        verdict = {false, f};
        return false;
    });
    return verdict;
}

auto retractions(const Digraph & h) -> vector<VertexMap>
{
    vector<VertexMap> result;
    for_each_homomorphism(h, h, {}, [&](const VertexMap & f) {
        if (is_idempotent(f))
            result.push_back(f);
        return true;
    });
    return result;
}

auto is_retract_trivial(const Digraph & h) -> TrivialityVerdict
{
    TrivialityVerdict verdict{true, std::nullopt};
    for_each_homomorphism(h, h, {}, [&](const VertexMap & f) {
        if (! is_idempotent(f) || f.is_identity() || f.is_constant())
            return true;
        verdict = {false, f};
        return false;
    });
    return verdict;
}

auto is_pair_endo_trivial(const Digraph & h, std::span<const Vertex> s, FixMode mode) -> TrivialityVerdict
{
    for (auto v : s)
        if (v >= h.size())
            invalid_input("subset vertex " + std::to_string(v) + " is out of range");
    TrivialityVerdict verdict{true, std::nullopt};
    SearchConstraints c;
    if (mode == FixMode::Pointwise) {
        ListAssignment lists;
        lists.lists.assign(h.size(), {});
        for (Vertex v = 0; v < h.size(); ++v)
            for (Vertex a = 0; a < h.size(); ++a)
                lists.lists[v].push_back(a);
        for (auto v : s)
            lists.lists[v] = {v};
        c.lists = std::move(lists);
    }
    else {
        // Setwise fixing keeps S inside S.
        ListAssignment lists;
        lists.lists.assign(h.size(), {});
        vector<Vertex> members(s.begin(), s.end());
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        for (Vertex v = 0; v < h.size(); ++v)
            if (std::binary_search(members.begin(), members.end(), v))
                lists.lists[v] = members;
            else
                for (Vertex a = 0; a < h.size(); ++a)
                    lists.lists[v].push_back(a);
        c.lists = std::move(lists);
    }
    for_each_homomorphism(h, h, c, [&](const VertexMap & f) {
        if (! fixes(f, s, mode) || is_automorphism(h, f))
            return true;
        verdict = {false, f};
        return false;
    });
    return verdict;
}

auto self_map_index(const VertexMap & f) -> size_t
{
    return TupleCodec(f.codomain_size, f.domain_size()).encode(f.image);
}

auto self_map_digraph(const Digraph & g) -> SelfMapDigraph
{
    auto n = g.size();
    if (n > 6)
        size_bound_exceeded("full self-map digraph of a " + std::to_string(n) + "-vertex digraph", 6);
    auto count = self_map_count(n);
    TupleCodec codec(n, n);
    SelfMapDigraph result;
    vector<Edge> edges;
    auto edge_bound = limits().self_map_edges;
    for (size_t i = 0; i < count; ++i) {
        VertexMap f(n, codec.decode(i));
        for_each_successor(g, f, [&](const vector<Vertex> & img) {
            if (edges.size() >= edge_bound)
                size_bound_exceeded("self-map digraph edges", edge_bound);
            edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(codec.encode(img)));
        });
        result.maps.push_back(std::move(f));
    }
    result.digraph = Digraph(count, std::move(edges));
    return result;
}

auto endomorphism_digraph(const Digraph & g) -> SelfMapDigraph
{
    auto monoid = endomorphisms(g);
    auto n = g.size();
    std::unordered_map<size_t, Vertex> position;
    for (size_t i = 0; i < monoid.size(); ++i)
        position[self_map_index(monoid.elements[i].map)] = static_cast<Vertex>(i);
    TupleCodec codec(n, n);
    vector<Edge> edges;
    auto edge_bound = limits().self_map_edges;
    for (size_t i = 0; i < monoid.size(); ++i)
        for_each_successor(g, monoid.elements[i].map, [&](const vector<Vertex> & img) {
            auto it = position.find(codec.encode(img));
            if (it == position.end())
                return;
            if (edges.size() >= edge_bound)
                size_bound_exceeded("endomorphism digraph edges", edge_bound);
            edges.emplace_back(static_cast<Vertex>(i), it->second);
        });
    SelfMapDigraph result;
    result.digraph = Digraph(monoid.size(), std::move(edges));
    for (auto & e : monoid.elements)
        result.maps.push_back(e.map);
    result.monoid = std::move(monoid);
    return result;
}

auto curry(const VertexMap & phi, const Digraph & h, const Digraph & g) -> Curried
{
    auto m = g.size();
    if (phi.domain_size() != h.size() * m || phi.codomain_size != m)
        invalid_input("curried map must send the product H × G to G");
    if (! is_homomorphism(direct_product(h, g), g, phi))
        precondition_failed("map is not a homomorphism from H × G to G");
    Curried c;
    vector<Vertex> idx;
    size_t self_maps = 1;
    for (size_t i = 0; i < m; ++i)
        self_maps *= m;
    c.lands_in_endomorphisms = true;
    for (Vertex x = 0; x < h.size(); ++x) {
        vector<Vertex> img(m);
        for (Vertex u = 0; u < m; ++u)
            img[u] = phi(x * static_cast<Vertex>(m) + u);
        VertexMap f(m, std::move(img));
        idx.push_back(static_cast<Vertex>(self_map_index(f)));
        c.lands_in_endomorphisms = c.lands_in_endomorphisms && is_homomorphism(g, g, f);
        c.maps.push_back(std::move(f));
    }
    c.into_self_maps = VertexMap(self_maps, std::move(idx));
    return c;
}

auto quotient_digraph(const Digraph & h, const VertexMap & quotient) -> Digraph
{
    vector<Edge> edges;
    for (auto & [u, v] : h.edges())
        edges.emplace_back(quotient(u), quotient(v));
    return Digraph(quotient.codomain_size, std::move(edges));
}

auto homomorphic_images(const Digraph & h) -> vector<HomomorphicImage>
{
    auto n = h.size();
    if (n > 10)
        size_bound_exceeded("partitions of a " + std::to_string(n) + "-vertex digraph", 10);
    vector<HomomorphicImage> result;
    if (n == 0) {
        result.push_back({Digraph(0), VertexMap(0, {})});
        return result;
    }
    // Restricted growth strings: block[0] = 0, block[i] ≤ 1 + max(block[<i]).
    vector<Vertex> block(n, 0);
    std::function<void(size_t, Vertex)> extend = [&](size_t i, Vertex used) {
        if (i == n) {
            VertexMap q(used, block);
            result.push_back({quotient_digraph(h, q), q});
            return;
        }
        for (Vertex b = 0; b <= used; ++b) {
            block[i] = b;
            extend(i + 1, b == used ? used + 1 : used);
        }
    };
    block[0] = 0;
    extend(1, 1);
    return result;
}

} // namespace surjhom
