#include <surjhom/error.hpp>
#include <surjhom/gadget.hpp>
#include <surjhom/solver.hpp>

#include <algorithm>
#include <numeric>
#include <set>

namespace surjhom {

using std::size_t;
using std::vector;

auto build_cyl(size_t m) -> CylGadget
{
    if (m < 2)
        precondition_failed("Cyl_m needs m >= 2");
    CylGadget c;
    c.m = m;
    vector<Edge> edges;
    auto at = [m](size_t i, size_t j) { return static_cast<Vertex>(j * m + i); };
    for (size_t j = 0; j < m; ++j)
        for (size_t i = 0; i < m; ++i) {
            edges.emplace_back(at(i, j), at(i, j));
            edges.emplace_back(at(i, j), at((i + 1) % m, j));
            if (j + 1 < m) {
                edges.emplace_back(at(i, j), at(i, j + 1));
                edges.emplace_back(at(i, j + 1), at((i + 1) % m, j));
            }
        }
    c.digraph = Digraph(m * m, std::move(edges));
    for (size_t i = 0; i < m; ++i) {
        c.bottom.push_back(at(i, 0));
        c.top.push_back(at(i, m - 1));
    }
    return c;
}

auto rotation_shift(const VertexMap & f) -> std::optional<size_t>
{
    auto n = f.domain_size();
    if (n == 0 || f.codomain_size != n)
        return std::nullopt;
    size_t s = f(0);
    for (Vertex i = 0; i < n; ++i)
        if (f(i) != (i + s) % n)
            return std::nullopt;
    return s;
}

auto verify_dagger(size_t m) -> DaggerReport
{
    auto cyl = build_cyl(m);
    auto cycle = directed_cycle(m, true);
    DaggerReport report;
    report.m = m;
    TupleCodec candidates(m, m);
    if (candidates.count() > limits().materialise)
        size_bound_exceeded("top-copy maps of Cyl_" + std::to_string(m), limits().materialise);

    ListAssignment lists;
    vector<Vertex> all(m);
    std::iota(all.begin(), all.end(), Vertex{0});
    lists.lists.assign(m * m, all);
    for (size_t i = 0; i < m; ++i)
        lists.lists[cyl.bottom[i]] = {static_cast<Vertex>(i)};

    for (size_t t = 0; t < candidates.count(); ++t) {
        auto image = candidates.decode(t);
        for (size_t i = 0; i < m; ++i)
            lists.lists[cyl.top[i]] = {image[i]};
        if (find_list_homomorphism(cyl.digraph, cycle, lists))
            report.top_maps.emplace_back(m, image);
    }

    std::set<size_t> shifts;
    bool only_rotations = true;
    for (auto & f : report.top_maps) {
        if (auto s = rotation_shift(f))
            shifts.insert(*s);
        else
            only_rotations = false;
    }
    report.holds = only_rotations && shifts.size() == m && report.top_maps.size() == m;
    return report;
}

auto problem_name(Problem p) -> std::string
{
    switch (p) {
    case Problem::Retraction: return "retraction";
    case Problem::SurjectiveColouring: return "surjective-colouring";
    }
    return "unknown";
}

auto InstanceBuilder::add_vertex(Provenance p) -> Vertex
{
    _provenance.push_back(std::move(p));
    return static_cast<Vertex>(_provenance.size() - 1);
}

auto InstanceBuilder::add_edge(Vertex u, Vertex v) -> void
{
    _edges.emplace_back(u, v);
}

auto InstanceBuilder::attach_cyl(std::span<const Vertex> bottom_cycle, std::optional<Vertex> top_vertex,
    size_t top_position) -> const GadgetPlacement &
{
    auto m = bottom_cycle.size();
    if (top_position >= m)
        precondition_failed("top position out of range");
    auto cyl = build_cyl(m);
    GadgetPlacement placement{m, vector<Vertex>(m * m)};
    auto id = _gadgets.size();
    for (size_t j = 0; j < m; ++j)
        for (size_t i = 0; i < m; ++i) {
            Vertex out;
            if (j == 0)
                out = bottom_cycle[i];
            else if (j == m - 1 && i == top_position && top_vertex)
                out = *top_vertex;
            else
                out = add_vertex(Provenance{std::nullopt, std::nullopt, GadgetTag{id, j, i}, std::nullopt});
            placement.cells[j * m + i] = out;
        }
    for (auto & [u, v] : cyl.digraph.edges())
        add_edge(placement.cells[u], placement.cells[v]);
    _gadgets.push_back(std::move(placement));
    return _gadgets.back();
}

auto InstanceBuilder::finish(Claim claim, std::optional<VertexMap> embedding) -> ReductionInstance
{
    ReductionInstance r;
    r.digraph = Digraph(_provenance.size(), std::move(_edges));
    r.provenance = std::move(_provenance);
    r.gadgets = std::move(_gadgets);
    r.claim = std::move(claim);
    r.embedding = std::move(embedding);
    _edges.clear();
    _provenance.clear();
    _gadgets.clear();
    return r;
}

auto check_sub_cycle(const Digraph & h, std::span<const Vertex> s, const HamiltonCycle & c) -> void
{
    vector<Vertex> members(s.begin(), s.end());
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end())
        invalid_input("subset lists a vertex twice");
    for (auto v : members)
        if (v >= h.size())
            invalid_input("subset vertex " + std::to_string(v) + " is out of range");
    if (! is_tournament(induced_subgraph(h, members)))
        precondition_failed("subset does not induce a tournament");
    vector<Vertex> order = c.order;
    std::sort(order.begin(), order.end());
    if (order != members)
        precondition_failed("cycle does not visit exactly the subset");
    for (size_t i = 0; i < c.order.size(); ++i)
        if (! h.has_edge(c.order[i], c.order[(i + 1) % c.order.size()]))
            precondition_failed("cycle step (" + std::to_string(c.order[i]) + ","
                + std::to_string(c.order[(i + 1) % c.order.size()]) + ") is not an edge");
}

auto build_F(const Digraph & h, std::span<const Vertex> s, const HamiltonCycle & c) -> ReductionInstance
{
    check_sub_cycle(h, s, c);
    InstanceBuilder b;
    for (Vertex v = 0; v < h.size(); ++v)
        b.add_vertex(Provenance{std::nullopt, v, std::nullopt, std::nullopt});
    for (auto & [u, v] : h.edges())
        b.add_edge(u, v);
    b.attach_cyl(c.order, std::nullopt);
    Claim claim;
    claim.construction = "F";
    claim.source_problem = Problem::Retraction;
    claim.target_problem = Problem::Retraction;
    claim.source_template = h;
    claim.target_template = h;
    vector<Vertex> id(h.size());
    std::iota(id.begin(), id.end(), Vertex{0});
    auto inst = b.finish(std::move(claim));
    inst.embedding = VertexMap(inst.digraph.size(), id);
    return inst;
}

auto spill(const Digraph & h, std::span<const Vertex> s, const HamiltonCycle & c) -> SpillCertificate
{
    auto f = build_F(h, s, c);
    auto & gadget = f.gadgets.front();
    auto m = gadget.m;

    ListAssignment lists;
    vector<Vertex> all(h.size());
    std::iota(all.begin(), all.end(), Vertex{0});
    lists.lists.assign(f.digraph.size(), all);
    for (Vertex v = 0; v < h.size(); ++v)
        lists.lists[v] = {v};

    SpillCertificate cert;
    cert.sub.assign(s.begin(), s.end());
    std::sort(cert.sub.begin(), cert.sub.end());
    cert.cycle = c;
    vector<std::optional<SpillWitness>> found(h.size());
    for (Vertex y = 0; y < h.size(); ++y) {
        if (found[y])
            continue;
        for (size_t p = 0; p < m && ! found[y]; ++p) {
            auto x = gadget.top(p);
            lists.lists[x] = {y};
            auto r = find_list_homomorphism(f.digraph, h, lists);
            lists.lists[x] = all;
            if (! r)
                continue;
            // The same retraction certifies every other value on the top copy.
            for (size_t q = 0; q < m; ++q) {
                auto xq = gadget.top(q);
                auto yq = (*r)(xq);
                if (! found[yq])
                    found[yq] = SpillWitness{yq, xq, *r};
            }
        }
    }
    for (Vertex y = 0; y < h.size(); ++y)
        if (found[y]) {
            cert.spill.push_back(y);
            cert.witnesses.push_back(std::move(*found[y]));
        }
    return cert;
}

auto positional_spill(const Digraph & h, std::span<const Vertex> s, const HamiltonCycle & c) -> vector<vector<Vertex>>
{
    auto f = build_F(h, s, c);
    auto & gadget = f.gadgets.front();
    auto m = gadget.m;

    ListAssignment lists;
    vector<Vertex> all(h.size());
    std::iota(all.begin(), all.end(), Vertex{0});
    lists.lists.assign(f.digraph.size(), all);
    for (Vertex v = 0; v < h.size(); ++v)
        lists.lists[v] = {v};

    // reached[p][y]: 0 unknown, 1 reached, 2 impossible.
    vector<vector<char>> reached(m, vector<char>(h.size(), 0));
    for (size_t p = 0; p < m; ++p)
        for (Vertex y = 0; y < h.size(); ++y) {
            if (reached[p][y])
                continue;
            auto x = gadget.top(p);
            lists.lists[x] = {y};
            auto r = find_list_homomorphism(f.digraph, h, lists);
            lists.lists[x] = all;
            if (! r) {
                reached[p][y] = 2;
                continue;
            }
            for (size_t q = 0; q < m; ++q)
                reached[q][(*r)(gadget.top(q))] = 1;
        }
    vector<vector<Vertex>> out(m);
    for (size_t p = 0; p < m; ++p)
        for (Vertex y = 0; y < h.size(); ++y)
            if (reached[p][y] == 1)
                out[p].push_back(y);
    return out;
}

auto verify_spill_certificate(const Digraph & h, const SpillCertificate & cert) -> bool
{
    ReductionInstance f;
    try {
        f = build_F(h, cert.sub, cert.cycle);
    }
    catch (const Error &) {
        return false;
    }
    auto & gadget = f.gadgets.front();
    if (! std::is_sorted(cert.spill.begin(), cert.spill.end())
        || std::adjacent_find(cert.spill.begin(), cert.spill.end()) != cert.spill.end())
        return false;
    if (! std::includes(cert.spill.begin(), cert.spill.end(), cert.sub.begin(), cert.sub.end()))
        return false;
    if (cert.witnesses.size() != cert.spill.size())
        return false;
    for (size_t i = 0; i < cert.spill.size(); ++i) {
        auto & w = cert.witnesses[i];
        if (w.y != cert.spill[i] || w.retraction.domain_size() != f.digraph.size() || w.retraction.codomain_size != h.size())
            return false;
        bool on_top = false;
        for (size_t p = 0; p < gadget.m; ++p)
            on_top = on_top || gadget.top(p) == w.x;
        if (! on_top || w.retraction(w.x) != w.y)
            return false;
        if (! is_retraction_witness(RetractionInstance{f.digraph, *f.embedding}, h, w.retraction))
            return false;
    }
    return true;
}

} // namespace surjhom
