#include <surjhom/error.hpp>
#include <surjhom/figures.hpp>
#include <surjhom/solver.hpp>

namespace surjhom {

using std::vector;

namespace {
    const vector<Vertex> left_cycle{0, 1, 2};
    const vector<Vertex> right_cycle{3, 4, 5};
}

auto cross_orientation(std::uint32_t bits) -> Digraph
{
    if (bits >= 512)
        invalid_input("cross orientation code must be below 512");
    vector<Edge> edges{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}};
    for (Vertex v = 0; v < 6; ++v)
        edges.emplace_back(v, v);
    for (Vertex l = 0; l < 3; ++l)
        for (Vertex r = 3; r < 6; ++r) {
            if (bits >> (3 * l + (r - 3)) & 1)
                edges.emplace_back(r, l);
            else
                edges.emplace_back(l, r);
        }
    return Digraph(6, std::move(edges));
}

auto check_one_way(const Digraph & h) -> OneWayEvidence
{
    OneWayEvidence e;
    e.retraction_to_right = retracts_to(h, right_cycle);
    e.retracts_to_left = retracts_to(h, left_cycle).has_value();
    // Endomorphisms sending L into R; any injective one is an isomorphism
    // onto R since both are reflexive 3-cycles.
    ListAssignment lists;
    lists.lists.assign(6, {0, 1, 2, 3, 4, 5});
    for (auto v : left_cycle)
        lists.lists[v] = right_cycle;
    for_each_homomorphism(h, h, SearchConstraints{lists, false, false}, [&](const VertexMap & f) {
        if (f(0) != f(1) && f(1) != f(2) && f(0) != f(2)) {
            e.endomorphism_left_to_right = f;
            return false;
        }
        return true;
    });
    return e;
}

auto check_full_spill(const Digraph & h) -> FullSpillEvidence
{
    FullSpillEvidence e;
    e.retracts_to_left = retracts_to(h, left_cycle).has_value();
    e.spill = spill(h, left_cycle, HamiltonCycle{left_cycle});
    return e;
}

auto search_figure_tournaments() -> FigureSearch
{
    FigureSearch result;
    for (std::uint32_t bits = 0; bits < 512; ++bits) {
        auto h = cross_orientation(bits);
        if (check_one_way(h).holds())
            result.one_way.push_back({bits, h});
        if (check_full_spill(h).holds())
            result.full_spill.push_back({bits, h});
    }
    return result;
}

} // namespace surjhom
