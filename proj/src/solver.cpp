#include <surjhom/error.hpp>
#include <surjhom/solver.hpp>

#include <algorithm>
#include <bit>

namespace surjhom {

using std::size_t;
using std::uint64_t;
using std::vector;

namespace {
    using Mask = uint64_t;

    constexpr auto bit(Vertex v) -> Mask { return Mask{1} << v; }

    class Engine {
    public:
        Engine(const Digraph & source, const Digraph & target, const SearchConstraints & constraints,
            const std::function<bool(const VertexMap &)> & visit) :
            _g(source),
            _h(target),
            _c(constraints),
            _visit(visit)
        {
            if (_h.size() > 64)
                size_bound_exceeded("homomorphism target has " + std::to_string(_h.size()) + " vertices", 64);
            auto bound = limits().solver_vertices;
            if (_g.size() > bound)
                size_bound_exceeded("homomorphism source has " + std::to_string(_g.size()) + " vertices", bound);

            auto m = _h.size();
            _full = m == 64 ? ~Mask{0} : bit(static_cast<Vertex>(m)) - 1;
            _out.assign(m, 0);
            _in.assign(m, 0);
            for (auto & [a, b] : _h.edges()) {
                _out[a] |= bit(b);
                _in[b] |= bit(a);
                if (a == b)
                    _loops |= bit(a);
                else
                    _target_edges.emplace_back(a, b);
            }
            for (Vertex u = 0; u < _g.size(); ++u)
                for (auto v : _g.out(u))
                    if (u != v)
                        _source_edges.emplace_back(u, v);
        }

        auto run() -> SearchStats
        {
            auto n = _g.size();
            vector<Mask> domains(n, _full);
            if (_c.lists) {
                if (_c.lists->lists.size() != n)
                    invalid_input("list assignment has " + std::to_string(_c.lists->lists.size()) + " lists for "
                        + std::to_string(n) + " vertices");
                for (Vertex u = 0; u < n; ++u) {
                    Mask m = 0;
                    for (auto a : _c.lists->lists[u]) {
                        if (a >= _h.size())
                            invalid_input("list entry " + std::to_string(a) + " is not a template vertex");
                        m |= bit(a);
                    }
                    domains[u] = m;
                }
            }
            for (Vertex u = 0; u < n; ++u)
                if (_g.has_loop(u))
                    domains[u] &= _loops;

            vector<Vertex> dirty(n);
            for (Vertex u = 0; u < n; ++u)
                dirty[u] = u;
            if (propagate(domains, dirty))
                search(domains);
            return _stats;
        }

    private:
        const Digraph & _g;
        const Digraph & _h;
        const SearchConstraints & _c;
        const std::function<bool(const VertexMap &)> & _visit;
        Mask _full = 0, _loops = 0;
        vector<Mask> _out, _in;
        vector<Edge> _source_edges, _target_edges;
        SearchStats _stats;
        bool _stopped = false;

        auto support(Mask dom, const vector<Mask> & table) const -> Mask
        {
            Mask s = 0;
            while (dom) {
                s |= table[std::countr_zero(dom)];
                dom &= dom - 1;
            }
            return s;
        }

        auto propagate(vector<Mask> & domains, vector<Vertex> queue) const -> bool
        {
            vector<bool> queued(domains.size(), false);
            for (auto u : queue)
                queued[u] = true;
            for (auto & d : domains)
                if (d == 0)
                    return false;
            while (! queue.empty()) {
                auto u = queue.back();
                queue.pop_back();
                queued[u] = false;
                auto forward = support(domains[u], _out);
                for (auto v : _g.out(u)) {
                    if (v == u)
                        continue;
                    auto narrowed = domains[v] & forward;
                    if (narrowed != domains[v]) {
                        if (! narrowed)
                            return false;
                        domains[v] = narrowed;
                        if (! queued[v]) {
                            queued[v] = true;
                            queue.push_back(v);
                        }
                    }
                }
                auto backward = support(domains[u], _in);
                for (auto w : _g.in(u)) {
                    if (w == u)
                        continue;
                    auto narrowed = domains[w] & backward;
                    if (narrowed != domains[w]) {
                        if (! narrowed)
                            return false;
                        domains[w] = narrowed;
                        if (! queued[w]) {
                            queued[w] = true;
                            queue.push_back(w);
                        }
                    }
                }
            }
            return true;
        }

        // Every target vertex must be matched to a distinct source vertex
        // that can still take it (Hall's condition for vertex-surjectivity).
        auto surjectivity_possible(const vector<Mask> & domains) const -> bool
        {
            Mask reachable = 0;
            for (auto d : domains)
                reachable |= d;
            if (reachable != _full)
                return false;
            auto m = _h.size();
            if (m > domains.size())
                return false;
            constexpr size_t none = static_cast<size_t>(-1);
            vector<size_t> owner(domains.size(), none);
            vector<char> visited;
            std::function<bool(Vertex)> augment = [&](Vertex y) -> bool {
                for (size_t u = 0; u < domains.size(); ++u) {
                    if (! (domains[u] & bit(y)) || visited[u])
                        continue;
                    visited[u] = 1;
                    if (owner[u] == none || augment(static_cast<Vertex>(owner[u]))) {
                        owner[u] = y;
                        return true;
                    }
                }
                return false;
            };
            for (Vertex y = 0; y < m; ++y) {
                visited.assign(domains.size(), 0);
                if (! augment(y))
                    return false;
            }
            return true;
        }

        auto edge_surjectivity_possible(const vector<Mask> & domains) const -> bool
        {
            vector<Mask> possible(_h.size(), 0);
            for (auto & [u, v] : _source_edges) {
                auto du = domains[u];
                while (du) {
                    auto a = std::countr_zero(du);
                    possible[a] |= _out[a] & domains[v];
                    du &= du - 1;
                }
            }
            for (auto & [a, b] : _target_edges)
                if (! (possible[a] & bit(b)))
                    return false;
            return true;
        }

        auto search(vector<Mask> & domains) -> void
        {
            if (_stopped)
                return;
            ++_stats.nodes;
            if (_c.vertex_surjective && ! surjectivity_possible(domains))
                return;
            if (_c.edge_surjective && ! edge_surjectivity_possible(domains))
                return;

            auto n = domains.size();
            size_t branch = n;
            for (size_t u = 0; u < n; ++u)
                if (std::popcount(domains[u]) > 1) {
                    branch = u;
                    break;
                }

            if (branch == n) {
                vector<Vertex> img(n);
                for (size_t u = 0; u < n; ++u)
                    img[u] = static_cast<Vertex>(std::countr_zero(domains[u]));
                ++_stats.solutions;
                if (! _visit(VertexMap(_h.size(), std::move(img))))
                    _stopped = true;
                return;
            }

            auto options = domains[branch];
            while (options && ! _stopped) {
                auto a = static_cast<Vertex>(std::countr_zero(options));
                options &= options - 1;
                auto child = domains;
                child[branch] = bit(a);
                if (propagate(child, {static_cast<Vertex>(branch)}))
                    search(child);
            }
        }
    };

    auto full_lists_except(size_t n, size_t m) -> ListAssignment
    {
        ListAssignment l;
        l.lists.assign(n, {});
        for (auto & list : l.lists)
            for (Vertex a = 0; a < m; ++a)
                list.push_back(a);
        return l;
    }
}

auto for_each_homomorphism(const Digraph & source, const Digraph & target, const SearchConstraints & constraints,
    const std::function<bool(const VertexMap &)> & visit) -> SearchStats
{
    Engine e(source, target, constraints, visit);
    return e.run();
}

auto first_homomorphism(const Digraph & source, const Digraph & target, const SearchConstraints & constraints)
    -> std::optional<VertexMap>
{
    std::optional<VertexMap> found;
    for_each_homomorphism(source, target, constraints, [&](const VertexMap & f) {
        found = f;
        return false;
    });
    return found;
}

auto all_homomorphisms(const Digraph & source, const Digraph & target, const SearchConstraints & constraints)
    -> vector<VertexMap>
{
    vector<VertexMap> result;
    for_each_homomorphism(source, target, constraints, [&](const VertexMap & f) {
        result.push_back(f);
        return true;
    });
    return result;
}

auto validate_retraction_instance(const RetractionInstance & inst, const Digraph & h) -> void
{
    auto & e = inst.embedding;
    if (e.domain_size() != h.size() || e.codomain_size != inst.graph.size())
        invalid_input("retraction embedding must map all " + std::to_string(h.size()) + " template vertices into the "
            + std::to_string(inst.graph.size()) + "-vertex instance");
    if (! e.is_injective())
        invalid_input("retraction embedding is not injective");
    for (Vertex a = 0; a < h.size(); ++a)
        for (Vertex b = 0; b < h.size(); ++b)
            if (h.has_edge(a, b) != inst.graph.has_edge(e(a), e(b)))
                invalid_input("embedded copy differs from the template at (" + std::to_string(a) + "," + std::to_string(b) + ")");
}

auto find_homomorphism(const Digraph & g, const Digraph & h) -> std::optional<VertexMap>
{
    return first_homomorphism(g, h);
}

auto find_surjective_homomorphism(const Digraph & g, const Digraph & h) -> std::optional<VertexMap>
{
    SearchConstraints c;
    c.vertex_surjective = true;
    return first_homomorphism(g, h, c);
}

auto find_retraction(const RetractionInstance & inst, const Digraph & h) -> std::optional<VertexMap>
{
    validate_retraction_instance(inst, h);
    auto lists = full_lists_except(inst.graph.size(), h.size());
    for (Vertex a = 0; a < h.size(); ++a)
        lists.lists[inst.embedding(a)] = {a};
    SearchConstraints c;
    c.lists = std::move(lists);
    return first_homomorphism(inst.graph, h, c);
}

auto find_compaction(const Digraph & g, const Digraph & h, CompactionMode mode) -> std::optional<VertexMap>
{
    SearchConstraints c;
    c.edge_surjective = true;
    c.vertex_surjective = mode == CompactionMode::Strict;
    return first_homomorphism(g, h, c);
}

auto find_list_homomorphism(const Digraph & g, const Digraph & h, const ListAssignment & lists)
    -> std::optional<VertexMap>
{
    SearchConstraints c;
    c.lists = lists;
    return first_homomorphism(g, h, c);
}

auto is_retraction_witness(const RetractionInstance & inst, const Digraph & h, const VertexMap & f) -> bool
{
    if (! is_homomorphism(inst.graph, h, f))
        return false;
    for (Vertex a = 0; a < h.size(); ++a)
        if (f(inst.embedding(a)) != a)
            return false;
    return true;
}

auto is_compaction_witness(const Digraph & g, const Digraph & h, const VertexMap & f) -> bool
{
    if (! is_homomorphism(g, h, f))
        return false;
    for (auto & [a, b] : h.edges()) {
        if (a == b)
            continue;
        bool hit = false;
        for (auto & [u, v] : g.edges())
            if (f(u) == a && f(v) == b) {
                hit = true;
                break;
            }
        if (! hit)
            return false;
    }
    return true;
}

auto respects_lists(const VertexMap & f, const ListAssignment & lists) -> bool
{
    if (lists.lists.size() != f.domain_size())
        return false;
    for (size_t u = 0; u < f.domain_size(); ++u) {
        auto & l = lists.lists[u];
        if (std::find(l.begin(), l.end(), f.image[u]) == l.end())
            return false;
    }
    return true;
}

auto subset_instance(const Digraph & h, std::span<const Vertex> s) -> RetractionInstance
{
    vector<Vertex> members(s.begin(), s.end());
    std::sort(members.begin(), members.end());
    return RetractionInstance{h, VertexMap(h.size(), members)};
}

auto retracts_to(const Digraph & h, std::span<const Vertex> s) -> std::optional<VertexMap>
{
    auto inst = subset_instance(h, s);
    auto sub = induced_subgraph(h, s);
    auto r = find_retraction(inst, sub);
    if (! r)
        return std::nullopt;
    // Express the retraction in h's own vertex numbering.
    vector<Vertex> img(h.size());
    for (Vertex v = 0; v < h.size(); ++v)
        img[v] = inst.embedding(r->image[v]);
    return VertexMap(h.size(), std::move(img));
}

} // namespace surjhom
