#include <surjhom/catalogue.hpp>
#include <surjhom/error.hpp>
#include <surjhom/figures.hpp>

#include <charconv>
#include <mutex>
#include <optional>

namespace surjhom {

using std::string;
using std::string_view;
using std::vector;

namespace {
    auto parse_size(string_view digits) -> std::optional<std::size_t>
    {
        std::size_t k = 0;
        auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
        if (ec != std::errc{} || end != digits.data() + digits.size() || digits.empty())
            return std::nullopt;
        return k;
    }

    // Family name like "DC5*": prefix, size, reflexive marker.
    auto family(string_view name, string_view prefix, std::size_t & k, bool & reflexive) -> bool
    {
        if (! name.starts_with(prefix))
            return false;
        auto rest = name.substr(prefix.size());
        reflexive = rest.ends_with('*');
        if (reflexive)
            rest.remove_suffix(1);
        auto parsed = parse_size(rest);
        if (! parsed)
            return false;
        k = *parsed;
        return true;
    }

    auto figures() -> const FigureSearch &
    {
        static const FigureSearch found = search_figure_tournaments();
        return found;
    }

    auto must(bool ok, string_view name) -> void
    {
        if (! ok)
            throw Error(ErrorKind::Internal, "bundled digraph " + string(name) + " fails its defining predicates");
    }
}

auto bundled_digraph(string_view name) -> Digraph
{
    std::size_t k = 0;
    bool reflexive = false;
    if (family(name, "DC", k, reflexive)) {
        if (k < (reflexive ? 1u : 2u) || k > 7)
            invalid_input("bundled directed cycles need " + string(reflexive ? "1" : "2") + " <= k <= 7");
        auto g = directed_cycle(k, reflexive);
        must(is_strongly_connected(g) && (reflexive ? is_reflexive(g) : is_irreflexive(g)), name);
        return g;
    }
    if (family(name, "TT", k, reflexive)) {
        if (k < 1 || k > 8)
            invalid_input("bundled transitive tournaments need 1 <= k <= 8");
        auto g = transitive_tournament(k, reflexive);
        must(is_tournament(g) && is_transitive_tournament(g), name);
        return g;
    }
    if (family(name, "K", k, reflexive) && reflexive) {
        if (k < 1 || k > 8)
            invalid_input("bundled complete digraphs need 1 <= k <= 8");
        auto g = complete_digraph(k, true);
        must(g.edge_count() == k * k, name);
        return g;
    }
    if (name == "Hg") {
        Digraph g(3, {{0, 0}, {2, 2}, {0, 1}, {1, 0}, {0, 2}, {2, 0}, {2, 1}});
        must(! is_tournament(g) && ! is_reflexive(g), name);
        return g;
    }
    if (name == "Hf") {
        Digraph g(3, {{1, 1}, {2, 2}, {1, 2}, {0, 1}, {2, 0}});
        must(g.has_loop(1) && g.has_loop(2) && ! g.has_loop(0), name);
        return g;
    }
    if (name == "T4") {
        Digraph g(4, {{0, 0}, {1, 1}, {2, 2}, {3, 3}, {0, 1}, {1, 2}, {2, 0}, {3, 1}, {2, 3}, {0, 3}});
        must(is_reflexive_tournament(g) && is_strongly_connected(g), name);
        return g;
    }
    if (name == "T6-oneway") {
        auto & found = figures().one_way;
        if (found.empty())
            throw Error(ErrorKind::Internal, "no cross orientation has the one-way retraction property");
        auto g = found.front().tournament;
        must(is_reflexive_tournament(g) && check_one_way(g).holds(), name);
        return g;
    }
    if (name == "T6-fullspill") {
        auto & found = figures().full_spill;
        if (found.empty())
            throw Error(ErrorKind::Internal, "no cross orientation has the full-spill property");
        auto g = found.front().tournament;
        must(is_reflexive_tournament(g) && check_full_spill(g).holds(), name);
        return g;
    }
    invalid_input("unknown bundled digraph \"" + string(name) + "\"");
}

auto bundled_names() -> vector<string>
{
    vector<string> names;
    for (int k = 1; k <= 7; ++k)
        names.push_back("DC" + std::to_string(k) + "*");
    for (int k = 2; k <= 7; ++k)
        names.push_back("DC" + std::to_string(k));
    for (int k = 1; k <= 8; ++k) {
        names.push_back("TT" + std::to_string(k) + "*");
        names.push_back("TT" + std::to_string(k));
        names.push_back("K" + std::to_string(k) + "*");
    }
    for (auto n : {"Hg", "Hf", "T4", "T6-oneway", "T6-fullspill"})
        names.push_back(n);
    return names;
}

auto hg_wnu_table() -> Polymorphism
{
    Polymorphism p{3, 3, vector<Vertex>(27, 0)};
    p.table[13] = 1;
    p.table[26] = 2;
    return p;
}

} // namespace surjhom
