#include <surjhom/digraph.hpp>
#include <surjhom/error.hpp>

#include <algorithm>
#include <numeric>

namespace surjhom {

using std::size_t;
using std::vector;

Digraph::Digraph(size_t n) :
    Digraph(n, {}, {})
{
}

Digraph::Digraph(size_t n, vector<Edge> edge_list, vector<std::string> names) :
    _n(n),
    _names(std::move(names))
{
    if (! _names.empty() && _names.size() != n)
        invalid_input("names list has " + std::to_string(_names.size()) + " entries for " + std::to_string(n) + " vertices");

    for (auto & [u, v] : edge_list)
        if (u >= n || v >= n)
            invalid_input("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for " + std::to_string(n) + " vertices");

    std::sort(edge_list.begin(), edge_list.end());
    edge_list.erase(std::unique(edge_list.begin(), edge_list.end()), edge_list.end());

    _out_offsets.assign(n + 1, 0);
    _in_offsets.assign(n + 1, 0);
    for (auto & [u, v] : edge_list) {
        ++_out_offsets[u + 1];
        ++_in_offsets[v + 1];
    }
    std::partial_sum(_out_offsets.begin(), _out_offsets.end(), _out_offsets.begin());
    std::partial_sum(_in_offsets.begin(), _in_offsets.end(), _in_offsets.begin());

    _out_targets.resize(edge_list.size());
    _in_sources.resize(edge_list.size());
    vector<size_t> in_fill(_in_offsets.begin(), _in_offsets.end() - 1);
    for (size_t e = 0; e < edge_list.size(); ++e) {
        auto [u, v] = edge_list[e];
        _out_targets[e] = v;
        _in_sources[in_fill[v]++] = u;
    }

    if (n <= dense_limit && n > 0) {
        _words_per_row = (n + 63) / 64;
        _rows.assign(n * _words_per_row, 0);
        for (auto & [u, v] : edge_list)
            _rows[u * _words_per_row + v / 64] |= std::uint64_t{1} << (v % 64);
    }
}

auto Digraph::has_edge(Vertex u, Vertex v) const -> bool
{
    if (u >= _n || v >= _n)
        return false;
    if (! _rows.empty())
        return (_rows[u * _words_per_row + v / 64] >> (v % 64)) & 1;
    auto o = out(u);
    return std::binary_search(o.begin(), o.end(), v);
}

auto Digraph::out(Vertex u) const -> std::span<const Vertex>
{
    return {_out_targets.data() + _out_offsets[u], _out_offsets[u + 1] - _out_offsets[u]};
}

auto Digraph::in(Vertex v) const -> std::span<const Vertex>
{
    return {_in_sources.data() + _in_offsets[v], _in_offsets[v + 1] - _in_offsets[v]};
}

auto Digraph::row(Vertex u) const -> std::span<const std::uint64_t>
{
    if (_rows.empty())
        return {};
    return {_rows.data() + u * _words_per_row, _words_per_row};
}

auto Digraph::edges() const -> vector<Edge>
{
    vector<Edge> result;
    result.reserve(edge_count());
    for (Vertex u = 0; u < _n; ++u)
        for (auto v : out(u))
            result.emplace_back(u, v);
    return result;
}

auto Digraph::name(Vertex v) const -> std::string
{
    return _names.empty() ? std::to_string(v) : _names.at(v);
}

auto Digraph::with_names(vector<std::string> names) const -> Digraph
{
    return Digraph(_n, edges(), std::move(names));
}

auto Digraph::same_structure(const Digraph & other) const -> bool
{
    return _n == other._n && _out_offsets == other._out_offsets && _out_targets == other._out_targets;
}

auto Digraph::operator==(const Digraph & other) const -> bool
{
    return same_structure(other) && _names == other._names;
}

VertexMap::VertexMap(size_t codomain, vector<Vertex> img) :
    codomain_size(codomain),
    image(std::move(img))
{
    for (auto v : image)
        if (v >= codomain_size)
            invalid_input("map value " + std::to_string(v) + " outside codomain of size " + std::to_string(codomain_size));
}

auto VertexMap::identity(size_t n) -> VertexMap
{
    vector<Vertex> img(n);
    std::iota(img.begin(), img.end(), Vertex{0});
    return VertexMap(n, std::move(img));
}

auto VertexMap::constant(size_t domain, Vertex value, size_t codomain) -> VertexMap
{
    return VertexMap(codomain, vector<Vertex>(domain, value));
}

auto VertexMap::is_injective() const -> bool
{
    vector<bool> seen(codomain_size, false);
    for (auto v : image) {
        if (seen[v])
            return false;
        seen[v] = true;
    }
    return true;
}

auto VertexMap::is_surjective() const -> bool
{
    return image_set().size() == codomain_size;
}

auto VertexMap::is_constant() const -> bool
{
    return std::adjacent_find(image.begin(), image.end(), std::not_equal_to<>{}) == image.end();
}

auto VertexMap::is_identity() const -> bool
{
    if (domain_size() != codomain_size)
        return false;
    for (size_t v = 0; v < image.size(); ++v)
        if (image[v] != v)
            return false;
    return true;
}

auto VertexMap::image_set() const -> vector<Vertex>
{
    vector<Vertex> s = image;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

auto compose(const VertexMap & outer, const VertexMap & inner) -> VertexMap
{
    if (inner.codomain_size != outer.domain_size())
        invalid_input("cannot compose: inner codomain " + std::to_string(inner.codomain_size) + " vs outer domain "
            + std::to_string(outer.domain_size()));
    vector<Vertex> img(inner.domain_size());
    for (size_t v = 0; v < img.size(); ++v)
        img[v] = outer.image[inner.image[v]];
    return VertexMap(outer.codomain_size, std::move(img));
}

auto inverse(const VertexMap & f) -> VertexMap
{
    if (! f.is_bijective())
        invalid_input("inverse of a non-bijective map");
    vector<Vertex> img(f.domain_size());
    for (size_t v = 0; v < img.size(); ++v)
        img[f.image[v]] = static_cast<Vertex>(v);
    return VertexMap(f.domain_size(), std::move(img));
}

auto is_homomorphism(const Digraph & from, const Digraph & to, const VertexMap & f) -> bool
{
    if (f.domain_size() != from.size() || f.codomain_size != to.size())
        return false;
    for (Vertex u = 0; u < from.size(); ++u)
        for (auto v : from.out(u))
            if (! to.has_edge(f(u), f(v)))
                return false;
    return true;
}

auto is_isomorphism(const Digraph & from, const Digraph & to, const VertexMap & f) -> bool
{
    return f.is_bijective() && is_homomorphism(from, to, f) && is_homomorphism(to, from, inverse(f));
}

auto is_hamilton_cycle(const Digraph & h, const HamiltonCycle & c) -> bool
{
    auto n = h.size();
    if (c.order.size() != n || n == 0)
        return false;
    vector<bool> seen(n, false);
    for (auto v : c.order) {
        if (v >= n || seen[v])
            return false;
        seen[v] = true;
    }
    for (size_t j = 0; j < n; ++j)
        if (! h.has_edge(c.order[j], c.order[(j + 1) % n]))
            return false;
    return true;
}

auto is_reflexive(const Digraph & h) -> bool
{
    for (Vertex v = 0; v < h.size(); ++v)
        if (! h.has_loop(v))
            return false;
    return true;
}

auto is_irreflexive(const Digraph & h) -> bool
{
    for (Vertex v = 0; v < h.size(); ++v)
        if (h.has_loop(v))
            return false;
    return true;
}

auto is_tournament(const Digraph & h) -> bool
{
    for (Vertex u = 0; u < h.size(); ++u)
        for (Vertex v = u + 1; v < h.size(); ++v)
            if (h.has_edge(u, v) == h.has_edge(v, u))
                return false;
    return true;
}

auto is_semicomplete(const Digraph & h) -> bool
{
    for (Vertex u = 0; u < h.size(); ++u)
        for (Vertex v = u + 1; v < h.size(); ++v)
            if (! h.has_edge(u, v) && ! h.has_edge(v, u))
                return false;
    return true;
}

auto has_double_edge(const Digraph & h) -> bool
{
    for (Vertex u = 0; u < h.size(); ++u)
        for (auto v : h.out(u))
            if (v > u && h.has_edge(v, u))
                return true;
    return false;
}

auto is_reflexive_tournament(const Digraph & h) -> bool
{
    return is_reflexive(h) && is_tournament(h);
}

auto is_transitive_tournament(const Digraph & h) -> bool
{
    if (! is_tournament(h))
        precondition_failed("transitivity is only defined here for tournaments");
    for (Vertex u = 0; u < h.size(); ++u)
        for (auto v : h.out(u))
            for (auto w : h.out(v))
                if (u != v && v != w && ! h.has_edge(u, w))
                    return false;
    return true;
}

namespace {
    auto reach(const Digraph & g, Vertex start, bool forward) -> vector<bool>
    {
        vector<bool> seen(g.size(), false);
        vector<Vertex> stack{start};
        seen[start] = true;
        while (! stack.empty()) {
            auto u = stack.back();
            stack.pop_back();
            for (auto v : forward ? g.out(u) : g.in(u))
                if (! seen[v]) {
                    seen[v] = true;
                    stack.push_back(v);
                }
        }
        return seen;
    }
}

auto is_strongly_connected(const Digraph & g) -> bool
{
    if (g.size() == 0)
        return true;
    auto f = reach(g, 0, true), b = reach(g, 0, false);
    return std::all_of(f.begin(), f.end(), [](bool x) { return x; })
        && std::all_of(b.begin(), b.end(), [](bool x) { return x; });
}

auto is_weakly_connected(const Digraph & g) -> bool
{
    if (g.size() == 0)
        return true;
    vector<bool> seen(g.size(), false);
    vector<Vertex> stack{0};
    seen[0] = true;
    size_t count = 1;
    while (! stack.empty()) {
        auto u = stack.back();
        stack.pop_back();
        for (auto list : {g.out(u), g.in(u)})
            for (auto v : list)
                if (! seen[v]) {
                    seen[v] = true;
                    ++count;
                    stack.push_back(v);
                }
    }
    return count == g.size();
}

auto strong_components(const Digraph & g) -> vector<vector<Vertex>>
{
    // Iterative Tarjan.
    auto n = g.size();
    constexpr size_t unvisited = static_cast<size_t>(-1);
    vector<size_t> index(n, unvisited), low(n, 0), comp(n, unvisited);
    vector<bool> on_stack(n, false);
    vector<Vertex> stack;
    size_t counter = 0, comp_count = 0;

    struct Frame {
        Vertex v;
        size_t next;
    };
    for (Vertex root = 0; root < n; ++root) {
        if (index[root] != unvisited)
            continue;
        vector<Frame> call{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (! call.empty()) {
            auto & f = call.back();
            auto succ = g.out(f.v);
            if (f.next < succ.size()) {
                auto w = succ[f.next++];
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                }
                else if (on_stack[w])
                    low[f.v] = std::min(low[f.v], index[w]);
                continue;
            }
            auto v = f.v;
            call.pop_back();
            if (! call.empty())
                low[call.back().v] = std::min(low[call.back().v], low[v]);
            if (low[v] == index[v]) {
                Vertex w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = comp_count;
                } while (w != v);
                ++comp_count;
            }
        }
    }

    vector<vector<Vertex>> members(comp_count);
    for (Vertex v = 0; v < n; ++v)
        members[comp[v]].push_back(v);

    // Kahn over the condensation, least-member tie-break.
    vector<vector<size_t>> succ(comp_count);
    vector<size_t> indeg(comp_count, 0);
    for (Vertex u = 0; u < n; ++u)
        for (auto v : g.out(u))
            if (comp[u] != comp[v])
                succ[comp[u]].push_back(comp[v]);
    for (auto & s : succ) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        for (auto c : s)
            ++indeg[c];
    }
    auto by_min = [&](size_t a, size_t b) { return members[a].front() > members[b].front(); };
    vector<size_t> ready;
    for (size_t c = 0; c < comp_count; ++c)
        if (indeg[c] == 0)
            ready.push_back(c);
    std::make_heap(ready.begin(), ready.end(), by_min);
    vector<vector<Vertex>> result;
    while (! ready.empty()) {
        std::pop_heap(ready.begin(), ready.end(), by_min);
        auto c = ready.back();
        ready.pop_back();
        result.push_back(members[c]);
        for (auto d : succ[c])
            if (--indeg[d] == 0) {
                ready.push_back(d);
                std::push_heap(ready.begin(), ready.end(), by_min);
            }
    }
    return result;
}

auto hamilton_cycle(const Digraph & h) -> HamiltonCycle
{
    if (! is_tournament(h) || h.size() == 0)
        precondition_failed("hamilton_cycle needs a non-empty tournament");
    if (! is_strongly_connected(h))
        precondition_failed("hamilton_cycle needs a strongly connected tournament");

    auto n = h.size();
    if (n == 1)
        return HamiltonCycle{{0}};

    vector<Vertex> path{0};
    vector<bool> used(n, false);
    used[0] = true;
    // next_choice[d] indexes into out(path[d]).
    vector<size_t> next_choice{0};
    while (true) {
        if (path.size() == n && h.has_edge(path.back(), 0))
            return HamiltonCycle{path};
        auto depth = path.size() - 1;
        auto succ = h.out(path.back());
        bool advanced = false;
        if (path.size() < n) {
            while (next_choice[depth] < succ.size()) {
                auto w = succ[next_choice[depth]++];
                if (! used[w]) {
                    path.push_back(w);
                    used[w] = true;
                    next_choice.push_back(0);
                    advanced = true;
                    break;
                }
            }
        }
        if (! advanced) {
            if (path.size() == 1)
                break;
            used[path.back()] = false;
            path.pop_back();
            next_choice.pop_back();
        }
    }
    throw Error(ErrorKind::Internal, "strongly connected tournament without a Hamilton cycle");
}

TupleCodec::TupleCodec(size_t base, size_t arity) :
    _base(base),
    _arity(arity),
    _count(1)
{
    for (size_t i = 0; i < arity; ++i) {
        if (base != 0 && _count > static_cast<size_t>(-1) / base)
            size_bound_exceeded("tuple space overflows", static_cast<size_t>(-1));
        _count *= base;
    }
}

auto TupleCodec::encode(std::span<const Vertex> tuple) const -> size_t
{
    size_t index = 0;
    for (auto x : tuple)
        index = index * _base + x;
    return index;
}

auto TupleCodec::decode(size_t index) const -> vector<Vertex>
{
    vector<Vertex> tuple(_arity);
    for (size_t i = _arity; i-- > 0;) {
        tuple[i] = static_cast<Vertex>(index % _base);
        index /= _base;
    }
    return tuple;
}

auto TupleCodec::coordinate(size_t index, size_t i) const -> Vertex
{
    for (size_t j = _arity - 1; j > i; --j)
        index /= _base;
    return static_cast<Vertex>(index % _base);
}

auto direct_power(const Digraph & h, size_t k) -> Digraph
{
    if (k == 0)
        precondition_failed("direct_power needs k >= 1");
    auto bound = limits().materialise;
    size_t count = 1;
    for (size_t i = 0; i < k; ++i) {
        if (h.size() != 0 && count > bound / h.size())
            size_bound_exceeded("H^" + std::to_string(k) + " has too many vertices", bound);
        count *= h.size();
    }
    if (count > bound)
        size_bound_exceeded("H^" + std::to_string(k) + " has too many vertices", bound);

    auto base_edges = h.edges();
    vector<Edge> edges;
    // Edge tuples built coordinate by coordinate.
    vector<std::pair<size_t, size_t>> current{{0, 0}};
    for (size_t i = 0; i < k; ++i) {
        vector<std::pair<size_t, size_t>> next;
        next.reserve(current.size() * base_edges.size());
        for (auto & [a, b] : current)
            for (auto & [u, v] : base_edges)
                next.emplace_back(a * h.size() + u, b * h.size() + v);
        current = std::move(next);
        if (current.size() > limits().self_map_edges)
            size_bound_exceeded("H^" + std::to_string(k) + " has too many edges", limits().self_map_edges);
    }
    edges.reserve(current.size());
    for (auto & [a, b] : current)
        edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    return Digraph(count, std::move(edges));
}

auto direct_product(const Digraph & a, const Digraph & b) -> Digraph
{
    auto count = a.size() * b.size();
    if (count > limits().materialise)
        size_bound_exceeded("direct product has too many vertices", limits().materialise);
    vector<Edge> edges;
    for (auto & [x, y] : a.edges())
        for (auto & [u, v] : b.edges())
            edges.emplace_back(static_cast<Vertex>(x * b.size() + u), static_cast<Vertex>(y * b.size() + v));
    return Digraph(count, std::move(edges));
}

auto induced_subgraph(const Digraph & h, std::span<const Vertex> s) -> Digraph
{
    vector<Vertex> members(s.begin(), s.end());
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end())
        invalid_input("induced_subgraph: repeated vertex");
    constexpr Vertex absent = static_cast<Vertex>(-1);
    vector<Vertex> local(h.size(), absent);
    for (size_t i = 0; i < members.size(); ++i) {
        if (members[i] >= h.size())
            invalid_input("induced_subgraph: vertex " + std::to_string(members[i]) + " out of range");
        local[members[i]] = static_cast<Vertex>(i);
    }
    vector<Edge> edges;
    for (auto u : members)
        for (auto v : h.out(u))
            if (local[v] != absent)
                edges.emplace_back(local[u], local[v]);
    vector<std::string> names;
    if (h.has_names())
        for (auto u : members)
            names.push_back(h.names()[u]);
    return Digraph(members.size(), std::move(edges), std::move(names));
}

auto glue(std::span<const Digraph> parts, std::span<const std::pair<PartVertex, PartVertex>> identify) -> GluedUnion
{
    vector<size_t> offset(parts.size() + 1, 0);
    for (size_t p = 0; p < parts.size(); ++p)
        offset[p + 1] = offset[p] + parts[p].size();
    auto total = offset.back();

    vector<size_t> parent(total);
    std::iota(parent.begin(), parent.end(), size_t{0});
    auto find = [&](size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    auto flat = [&](const PartVertex & pv) {
        if (pv.part >= parts.size() || pv.vertex >= parts[pv.part].size())
            invalid_input("glue: (" + std::to_string(pv.part) + "," + std::to_string(pv.vertex) + ") out of range");
        return offset[pv.part] + pv.vertex;
    };
    for (auto & [a, b] : identify) {
        auto ra = find(flat(a)), rb = find(flat(b));
        if (ra != rb)
            parent[std::max(ra, rb)] = std::min(ra, rb);
    }

    // Roots are the least flat index of each class, hence its earliest slot.
    vector<size_t> root_slot(total, static_cast<size_t>(-1));
    GluedUnion result;
    result.slot.resize(parts.size());
    size_t next = 0;
    for (size_t p = 0; p < parts.size(); ++p) {
        result.slot[p].resize(parts[p].size());
        for (Vertex v = 0; v < parts[p].size(); ++v) {
            auto r = find(offset[p] + v);
            if (root_slot[r] == static_cast<size_t>(-1)) {
                root_slot[r] = next++;
                result.origins.emplace_back();
            }
            auto s = root_slot[r];
            for (auto & o : result.origins[s])
                if (o.part == p)
                    invalid_input("glue: vertices " + std::to_string(o.vertex) + " and " + std::to_string(v) + " of part "
                        + std::to_string(p) + " would be identified");
            result.slot[p][v] = static_cast<Vertex>(s);
            result.origins[s].push_back({p, v});
        }
    }

    vector<Edge> edges;
    for (size_t p = 0; p < parts.size(); ++p)
        for (auto & [u, v] : parts[p].edges())
            edges.emplace_back(result.slot[p][u], result.slot[p][v]);
    result.digraph = Digraph(next, std::move(edges));
    return result;
}

auto for_each_embedding(const Digraph & pattern, const Digraph & host,
    const std::function<bool(const vector<Vertex> &)> & visit) -> void
{
    auto k = pattern.size(), n = host.size();
    if (k > n)
        return;
    vector<Vertex> assignment(k);
    vector<bool> used(n, false);
    bool stop = false;

    auto consistent = [&](size_t depth, Vertex candidate) {
        if (pattern.has_loop(depth) != host.has_loop(candidate))
            return false;
        for (size_t j = 0; j < depth; ++j) {
            if (pattern.has_edge(depth, j) != host.has_edge(candidate, assignment[j]))
                return false;
            if (pattern.has_edge(j, depth) != host.has_edge(assignment[j], candidate))
                return false;
        }
        return true;
    };

    std::function<void(size_t)> extend = [&](size_t depth) {
        if (stop)
            return;
        if (depth == k) {
            if (! visit(assignment))
                stop = true;
            return;
        }
        for (Vertex c = 0; c < n && ! stop; ++c) {
            if (used[c] || ! consistent(depth, c))
                continue;
            assignment[depth] = c;
            used[c] = true;
            extend(depth + 1);
            used[c] = false;
        }
    };
    extend(0);
}

auto find_isomorphism(const Digraph & a, const Digraph & b) -> std::optional<VertexMap>
{
    if (a.size() != b.size() || a.edge_count() != b.edge_count())
        return std::nullopt;
    std::optional<VertexMap> found;
    for_each_embedding(a, b, [&](const vector<Vertex> & m) {
        found = VertexMap(b.size(), m);
        return false;
    });
    return found;
}

auto are_isomorphic(const Digraph & a, const Digraph & b) -> bool
{
    return find_isomorphism(a, b).has_value();
}

auto directed_cycle(size_t k, bool reflexive) -> Digraph
{
    vector<Edge> edges;
    for (Vertex i = 0; i < k; ++i) {
        edges.emplace_back(i, static_cast<Vertex>((i + 1) % k));
        if (reflexive)
            edges.emplace_back(i, i);
    }
    return Digraph(k, std::move(edges));
}

auto transitive_tournament(size_t k, bool reflexive) -> Digraph
{
    vector<Edge> edges;
    for (Vertex i = 0; i < k; ++i)
        for (Vertex j = reflexive ? i : i + 1; j < k; ++j)
            edges.emplace_back(i, j);
    return Digraph(k, std::move(edges));
}

auto complete_digraph(size_t k, bool reflexive) -> Digraph
{
    vector<Edge> edges;
    for (Vertex i = 0; i < k; ++i)
        for (Vertex j = 0; j < k; ++j)
            if (i != j || reflexive)
                edges.emplace_back(i, j);
    return Digraph(k, std::move(edges));
}

auto with_all_loops(const Digraph & g) -> Digraph
{
    auto edges = g.edges();
    for (Vertex v = 0; v < g.size(); ++v)
        edges.emplace_back(v, v);
    return Digraph(g.size(), std::move(edges), g.names());
}

} // namespace surjhom
