#include <surjhom/error.hpp>
#include <surjhom/poly.hpp>
#include <surjhom/solver.hpp>

#include <algorithm>
#include <numeric>

namespace surjhom {

using std::size_t;
using std::vector;

namespace {
    auto check_arity(size_t k) -> void
    {
        if (k == 0)
            invalid_input("arity must be positive");
        auto cap = limits().max_arity;
        if (k > cap)
            size_bound_exceeded("polymorphism arity " + std::to_string(k), cap);
    }

    auto full_lists(size_t count, size_t m) -> ListAssignment
    {
        ListAssignment l;
        vector<Vertex> all(m);
        std::iota(all.begin(), all.end(), Vertex{0});
        l.lists.assign(count, all);
        return l;
    }

    struct UnionFind {
        vector<size_t> parent;

        explicit UnionFind(size_t n) :
            parent(n)
        {
            std::iota(parent.begin(), parent.end(), size_t{0});
        }

        auto find(size_t x) -> size_t
        {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        }

        auto unite(size_t a, size_t b) -> void
        {
            a = find(a);
            b = find(b);
            if (a != b)
                parent[std::max(a, b)] = std::min(a, b);
        }
    };
}

auto Polymorphism::is_idempotent() const -> bool
{
    auto c = codec();
    for (Vertex x = 0; x < base; ++x) {
        vector<Vertex> diag(arity, x);
        if (table[c.encode(diag)] != x)
            return false;
    }
    return true;
}

auto projection(size_t base, size_t arity, size_t coordinate) -> Polymorphism
{
    if (coordinate >= arity)
        invalid_input("projection coordinate out of range");
    TupleCodec c(base, arity);
    Polymorphism p{arity, base, vector<Vertex>(c.count())};
    for (size_t i = 0; i < c.count(); ++i)
        p.table[i] = c.coordinate(i, coordinate);
    return p;
}

auto is_polymorphism(const Digraph & h, const Polymorphism & p) -> bool
{
    if (p.base != h.size())
        invalid_input("operation base differs from the template size");
    TupleCodec c(p.base, p.arity);
    if (p.table.size() != c.count())
        invalid_input("operation table has " + std::to_string(p.table.size()) + " entries, expected "
            + std::to_string(c.count()));
    for (auto v : p.table)
        if (v >= h.size())
            invalid_input("operation value " + std::to_string(v) + " is not a template vertex");
    // Walk coordinatewise edge tuples directly rather than materialising H^k.
    auto edges = h.edges();
    vector<size_t> at(p.arity, 0);
    vector<Vertex> s(p.arity), t(p.arity);
    if (edges.empty())
        return true;
    while (true) {
        for (size_t i = 0; i < p.arity; ++i) {
            s[i] = edges[at[i]].first;
            t[i] = edges[at[i]].second;
        }
        if (! h.has_edge(p.table[c.encode(s)], p.table[c.encode(t)]))
            return false;
        size_t i = p.arity;
        while (i > 0) {
            --i;
            if (++at[i] < edges.size())
                break;
            at[i] = 0;
            if (i == 0)
                return true;
        }
    }
}

auto for_each_polymorphism(const Digraph & h, size_t k, const std::function<bool(const Polymorphism &)> & visit)
    -> void
{
    check_arity(k);
    auto power = direct_power(h, k);
    for_each_homomorphism(power, h, {}, [&](const VertexMap & f) {
        return visit(Polymorphism{k, h.size(), f.image});
    });
}

auto enumerate_polymorphisms(const Digraph & h, size_t k) -> vector<Polymorphism>
{
    vector<Polymorphism> result;
    for_each_polymorphism(h, k, [&](const Polymorphism & p) {
        result.push_back(p);
        return true;
    });
    return result;
}

auto essentially_unary(const Polymorphism & p) -> std::optional<UnaryWitness>
{
    auto c = p.codec();
    for (size_t i = 0; i < p.arity; ++i) {
        vector<Vertex> g(p.base);
        for (Vertex x = 0; x < p.base; ++x) {
            vector<Vertex> diag(p.arity, x);
            g[x] = p.table[c.encode(diag)];
        }
        bool depends_only_on_i = true;
        for (size_t t = 0; t < c.count() && depends_only_on_i; ++t)
            depends_only_on_i = p.table[t] == g[c.coordinate(t, i)];
        if (depends_only_on_i)
            return UnaryWitness{i, VertexMap(p.base, std::move(g))};
    }
    return std::nullopt;
}

auto all_polymorphisms_essentially_unary(const Digraph & h, size_t k) -> UnarityVerdict
{
    UnarityVerdict v;
    for_each_polymorphism(h, k, [&](const Polymorphism & p) {
        ++v.count;
        if (v.holds && ! essentially_unary(p)) {
            v.holds = false;
            v.counterexample = p;
        }
        return true;
    });
    return v;
}

auto is_wnu(const Polymorphism & p) -> bool
{
    if (p.arity < 2 || ! p.is_idempotent())
        return false;
    auto c = p.codec();
    for (Vertex x = 0; x < p.base; ++x)
        for (Vertex y = 0; y < p.base; ++y) {
            if (x == y)
                continue;
            std::optional<Vertex> value;
            for (size_t i = 0; i < p.arity; ++i) {
                vector<Vertex> t(p.arity, x);
                t[i] = y;
                auto here = p.table[c.encode(t)];
                if (value && *value != here)
                    return false;
                value = here;
            }
        }
    return true;
}

auto is_majority(const Polymorphism & p) -> bool
{
    if (p.arity != 3)
        return false;
    auto c = p.codec();
    for (size_t t = 0; t < c.count(); ++t) {
        auto a = c.coordinate(t, 0), b = c.coordinate(t, 1), d = c.coordinate(t, 2);
        if ((a == b || a == d) && p.table[t] != a)
            return false;
        if (b == d && p.table[t] != b)
            return false;
    }
    return true;
}

auto find_wnu(const Digraph & h, size_t k) -> std::optional<Polymorphism>
{
    if (k < 2)
        invalid_input("a weak near-unanimity operation needs arity at least 2");
    check_arity(k);
    auto power = direct_power(h, k);
    TupleCodec c(h.size(), k);
    UnionFind classes(c.count());
    for (Vertex x = 0; x < h.size(); ++x)
        for (Vertex y = 0; y < h.size(); ++y) {
            if (x == y)
                continue;
            vector<Vertex> t(k, x);
            t[0] = y;
            auto first = c.encode(t);
            for (size_t i = 1; i < k; ++i) {
                vector<Vertex> u(k, x);
                u[i] = y;
                classes.unite(first, c.encode(u));
            }
        }
    // Classes are numbered by first occurrence, so lexicographic order on the
    // quotient matches lexicographic order on tables.
    vector<Vertex> class_of(c.count());
    vector<size_t> numbering(c.count(), c.count());
    Vertex next = 0;
    for (size_t t = 0; t < c.count(); ++t) {
        auto root = classes.find(t);
        if (numbering[root] == c.count())
            numbering[root] = next++;
        class_of[t] = static_cast<Vertex>(numbering[root]);
    }
    VertexMap q(next, class_of);
    auto quotient = [&] {
        vector<Edge> edges;
        for (auto & [u, v] : power.edges())
            edges.emplace_back(q(u), q(v));
        return Digraph(next, std::move(edges));
    }();
    auto lists = full_lists(next, h.size());
    for (Vertex x = 0; x < h.size(); ++x) {
        vector<Vertex> diag(k, x);
        lists.lists[q(static_cast<Vertex>(c.encode(diag)))] = {x};
    }
    auto f = find_list_homomorphism(quotient, h, lists);
    if (! f)
        return std::nullopt;
    Polymorphism p{k, h.size(), vector<Vertex>(c.count())};
    for (size_t t = 0; t < c.count(); ++t)
        p.table[t] = (*f)(class_of[t]);
    return p;
}

auto linear_order(const Digraph & h) -> vector<Vertex>
{
    if (! is_tournament(h) || ! is_transitive_tournament(h))
        precondition_failed("linear order needs a transitive tournament");
    vector<Vertex> order(h.size());
    std::iota(order.begin(), order.end(), Vertex{0});
    auto beats = [&](Vertex v) { return h.out_degree(v) - (h.has_loop(v) ? 1 : 0); };
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return beats(a) > beats(b); });
    return order;
}

auto find_majority_median(const Digraph & h) -> std::optional<MajorityResult>
{
    TupleCodec c(h.size(), 3);
    if (is_reflexive_tournament(h) && is_transitive_tournament(h)) {
        auto order = linear_order(h);
        vector<size_t> rank(h.size());
        for (size_t i = 0; i < order.size(); ++i)
            rank[order[i]] = i;
        Polymorphism p{3, h.size(), vector<Vertex>(c.count())};
        for (size_t t = 0; t < c.count(); ++t) {
            vector<Vertex> args = c.decode(t);
            std::sort(args.begin(), args.end(), [&](Vertex a, Vertex b) { return rank[a] < rank[b]; });
            p.table[t] = args[1];
        }
        if (! is_polymorphism(h, p))
            throw Error(ErrorKind::Internal, "median of a transitive tournament failed to verify");
        return MajorityResult{std::move(p), MajorityKind::Median};
    }
    auto power = direct_power(h, 3);
    auto lists = full_lists(c.count(), h.size());
    for (size_t t = 0; t < c.count(); ++t) {
        auto a = c.coordinate(t, 0), b = c.coordinate(t, 1), d = c.coordinate(t, 2);
        if (a == b || a == d)
            lists.lists[t] = {a};
        else if (b == d)
            lists.lists[t] = {b};
    }
    auto f = find_list_homomorphism(power, h, lists);
    if (! f)
        return std::nullopt;
    return MajorityResult{Polymorphism{3, h.size(), f->image}, MajorityKind::Search};
}

} // namespace surjhom
