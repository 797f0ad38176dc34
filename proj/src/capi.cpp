#include <surjhom/catalogue.hpp>
#include <surjhom/classify.hpp>
#include <surjhom/error.hpp>
#include <surjhom/report.hpp>
#include <surjhom/suite.hpp>
#include <surjhom/surjhom.h>

#include <cstring>
#include <numeric>

struct sh_digraph {
    surjhom::Digraph g;
};

namespace {

using namespace surjhom;
using std::string;
using std::vector;

thread_local string last_error;

auto to_status(ErrorKind kind) -> sh_status
{
    switch (kind) {
    case ErrorKind::InvalidInput: return SH_INVALID_INPUT;
    case ErrorKind::Precondition: return SH_PRECONDITION;
    case ErrorKind::SizeBound: return SH_SIZE_BOUND;
    case ErrorKind::Internal: return SH_INTERNAL;
    }
    return SH_INTERNAL;
}

auto emit(const json & j, char ** out) -> void
{
    auto text = j.dump(2);
    *out = static_cast<char *>(std::malloc(text.size() + 1));
    std::memcpy(*out, text.c_str(), text.size() + 1);
}

// Runs body, which fills a report and returns a status; converts exceptions.
template <typename Body>
auto guarded(char ** out, Body && body) -> sh_status
{
    last_error.clear();
    if (out)
        *out = nullptr;
    try {
        json report;
        auto status = body(report);
        if (out && ! report.is_null())
            emit(report, out);
        return status;
    }
    catch (const Error & e) {
        last_error = e.what();
        return to_status(e.kind());
    }
    catch (const json::exception & e) {
        last_error = string("malformed JSON: ") + e.what();
        return SH_INVALID_INPUT;
    }
    catch (const std::bad_alloc &) {
        last_error = "out of memory";
        return SH_SIZE_BOUND;
    }
    catch (const std::exception & e) {
        last_error = e.what();
        return SH_INTERNAL;
    }
}

auto need(const void * p, const char * what) -> void
{
    if (! p)
        invalid_input(string(what) + " is required");
}

auto parse_json(const char * text, const char * what) -> json
{
    need(text, what);
    return json::parse(text);
}

auto witness_report(const std::optional<VertexMap> & f, json & report) -> sh_status
{
    report = {{"exists", f.has_value()}};
    if (f)
        report["witness"] = to_json(*f);
    return f ? SH_OK : SH_NO_WITNESS;
}

auto lists_from_json(const json & j, std::size_t n) -> ListAssignment
{
    if (! j.is_array() || j.size() != n)
        invalid_input("lists must be an array with one list per vertex of G");
    ListAssignment lists;
    for (auto & l : j)
        lists.lists.push_back(vertex_list_from_json(l, "list"));
    return lists;
}

auto embedding_from(const json & options, std::size_t template_size, std::size_t instance_size) -> VertexMap
{
    vector<Vertex> image(template_size);
    if (options.contains("embedding"))
        image = vertex_list_from_json(options["embedding"], "embedding");
    else
        std::iota(image.begin(), image.end(), Vertex{0});
    if (image.size() != template_size)
        invalid_input("embedding must list one instance vertex per template vertex");
    for (auto v : image)
        if (v >= instance_size)
            invalid_input("embedding names a vertex outside G");
    return VertexMap(instance_size, std::move(image));
}

auto cycle_from(const Digraph & h, const vector<Vertex> & sub, const json & options) -> HamiltonCycle
{
    if (options.contains("cycle"))
        return HamiltonCycle{vertex_list_from_json(options["cycle"], "cycle")};
    auto sorted = sub;
    std::sort(sorted.begin(), sorted.end());
    for (auto v : sorted)
        if (v >= h.size())
            invalid_input("subset vertex " + std::to_string(v) + " is out of range");
    auto local = induced_subgraph(h, sorted);
    if (! is_strongly_connected(local))
        precondition_failed("subset does not induce a strongly connected subtournament");
    HamiltonCycle c;
    for (auto a : hamilton_cycle(local).order)
        c.order.push_back(sorted[a]);
    return c;
}

} // namespace

extern "C" {

const char * sh_last_error(void)
{
    return last_error.c_str();
}

void sh_string_free(char * s)
{
    std::free(s);
}

sh_status sh_digraph_load(const char * source, sh_digraph ** out)
{
    return guarded(nullptr, [&](json &) {
        need(source, "digraph source");
        need(out, "output handle");
        *out = new sh_digraph{load_digraph(source)};
        return SH_OK;
    });
}

sh_status sh_digraph_parse(const char * text, sh_digraph ** out)
{
    return guarded(nullptr, [&](json &) {
        need(text, "digraph text");
        need(out, "output handle");
        *out = new sh_digraph{parse_digraph(text)};
        return SH_OK;
    });
}

void sh_digraph_free(sh_digraph * g)
{
    delete g;
}

size_t sh_digraph_size(const sh_digraph * g)
{
    return g ? g->g.size() : 0;
}

sh_status sh_digraph_json(const sh_digraph * g, char ** out)
{
    return guarded(out, [&](json & report) {
        need(g, "digraph");
        report = to_json(g->g);
        return SH_OK;
    });
}

sh_status sh_digraph_dot(const sh_digraph * g, char ** out)
{
    return guarded(out, [&](json & report) {
        need(g, "digraph");
        report = {{"dot", to_dot(g->g)}};
        return SH_OK;
    });
}

sh_status sh_bundled_names(char ** out)
{
    return guarded(out, [&](json & report) {
        report = bundled_names();
        return SH_OK;
    });
}

sh_status sh_set_size_bound(size_t bound)
{
    return guarded(nullptr, [&](json &) {
        auto l = limits();
        l.materialise = bound;
        set_limits(l);
        return SH_OK;
    });
}

sh_status sh_set_solver_bound(size_t bound)
{
    return guarded(nullptr, [&](json &) {
        auto l = limits();
        l.solver_vertices = bound;
        set_limits(l);
        return SH_OK;
    });
}

sh_status sh_analyze(const sh_digraph * h, char ** out)
{
    return guarded(out, [&](json & report) {
        need(h, "template");
        report = analyze(h->g);
        return SH_OK;
    });
}

sh_status sh_solve(const char * kind, const sh_digraph * h, const sh_digraph * g, const char * extra, char ** out)
{
    return guarded(out, [&](json & report) {
        need(kind, "problem kind");
        need(h, "template");
        need(g, "instance");
        string k = kind;
        if (k == "hom")
            return witness_report(find_homomorphism(g->g, h->g), report);
        if (k == "surj")
            return witness_report(find_surjective_homomorphism(g->g, h->g), report);
        if (k == "compact")
            return witness_report(find_compaction(g->g, h->g, CompactionMode::EdgeSurjective), report);
        if (k == "compact-strict")
            return witness_report(find_compaction(g->g, h->g, CompactionMode::Strict), report);
        if (k == "retract") {
            auto e = vertex_list_from_json(parse_json(extra, "embedding"), "embedding");
            RetractionInstance inst{g->g, VertexMap(g->g.size(), e)};
            return witness_report(find_retraction(inst, h->g), report);
        }
        if (k == "list")
            return witness_report(
                find_list_homomorphism(g->g, h->g, lists_from_json(parse_json(extra, "lists"), g->g.size())), report);
        invalid_input("unknown problem kind \"" + k + "\"");
    });
}

sh_status sh_poly(const sh_digraph * h, size_t arity, const char * mode, char ** out)
{
    return guarded(out, [&](json & report) {
        need(h, "template");
        string m = mode ? mode : "enumerate";
        if (arity == 0)
            invalid_input("arity must be positive");
        report = {{"codec", codec_description(h->g.size(), arity)}};
        if (m == "enumerate") {
            auto tables = json::array();
            for (auto & p : enumerate_polymorphisms(h->g, arity))
                tables.push_back(p.table);
            report["count"] = tables.size();
            report["tables"] = std::move(tables);
            return SH_OK;
        }
        if (m == "wnu") {
            auto w = find_wnu(h->g, arity);
            report["exists"] = w.has_value();
            if (w)
                report["wnu"] = to_json(*w);
            return w ? SH_OK : SH_NO_WITNESS;
        }
        if (m == "majority") {
            if (arity != 3)
                invalid_input("majority operations are ternary");
            auto r = find_majority_median(h->g);
            report["exists"] = r.has_value();
            if (r) {
                report["majority"] = to_json(r->operation);
                report["kind"] = r->kind == MajorityKind::Median ? "median" : "search";
            }
            return r ? SH_OK : SH_NO_WITNESS;
        }
        if (m == "essentially-unary") {
            auto v = all_polymorphisms_essentially_unary(h->g, arity);
            report["holds"] = v.holds;
            report["count"] = v.count;
            if (v.counterexample)
                report["counterexample"] = to_json(*v.counterexample);
            return SH_OK;
        }
        invalid_input("unknown polymorphism mode \"" + m + "\"");
    });
}

sh_status sh_gadget_cyl(size_t m, int with_dagger, char ** out)
{
    return guarded(out, [&](json & report) {
        auto cyl = build_cyl(m);
        auto provenance = json::array();
        for (Vertex v = 0; v < cyl.digraph.size(); ++v)
            provenance.push_back({{"copy", cyl.copy_of(v)}, {"position", cyl.position_of(v)}});
        report = {{"m", m}, {"digraph", to_json(cyl.digraph)}, {"provenance", provenance}, {"bottom", cyl.bottom},
            {"top", cyl.top}};
        if (with_dagger)
            report["dagger"] = to_json(verify_dagger(m));
        return SH_OK;
    });
}

sh_status sh_spill(const sh_digraph * h, const char * sub, const char * cycle, char ** out)
{
    return guarded(out, [&](json & report) {
        need(h, "template");
        auto s = vertex_list_from_json(parse_json(sub, "subset"), "subset");
        json options = json::object();
        if (cycle)
            options["cycle"] = parse_json(cycle, "cycle");
        auto c = cycle_from(h->g, s, options);
        auto cert = spill(h->g, s, c);
        report = to_json(cert);
        report["full"] = cert.full(h->g.size());
        report["positional"] = positional_spill(h->g, s, c);
        return SH_OK;
    });
}

sh_status sh_reduce(const char * construction, const sh_digraph * h, const sh_digraph * g, const char * options,
    char ** out)
{
    return guarded(out, [&](json & report) {
        need(construction, "construction");
        need(h, "template");
        need(g, "instance");
        string name = construction;
        json opts = options ? json::parse(options) : json::object();
        if (! opts.is_object())
            invalid_input("reduction options must be a JSON object");
        auto & hg = h->g;
        auto & gg = g->g;
        ReductionInstance r;
        if (name == "base1" || name == "base2") {
            if (! opts.contains("sub"))
                invalid_input("base cases need \"sub\"");
            auto s = vertex_list_from_json(opts["sub"], "sub");
            auto c = cycle_from(hg, s, opts);
            std::sort(s.begin(), s.end());
            if (name == "base1")
                r = reduce_base_case_I(RetractionInstance{gg, embedding_from(opts, s.size(), gg.size())}, hg, s, c);
            else
                r = reduce_base_case_II(RetractionInstance{gg, embedding_from(opts, hg.size(), gg.size())}, hg, s, c);
        }
        else if (name == "gen1" || name == "gen2") {
            if (! opts.contains("levels") || ! opts["levels"].is_array() || opts["levels"].empty())
                invalid_input("general cases need \"levels\": [[H_0], ..., [H_k]]");
            vector<vector<Vertex>> levels;
            for (auto & l : opts["levels"])
                levels.push_back(vertex_list_from_json(l, "level"));
            bool first = name == "gen1";
            auto terminal = levels.size() == 1 ? (first ? ChainTerminal::BaseI : ChainTerminal::BaseII)
                                               : (first ? ChainTerminal::GeneralI : ChainTerminal::GeneralII);
            auto chain = build_chain(hg, levels, terminal);
            auto base_size = first ? chain.hosts[chain.top_level()].size() : hg.size();
            RetractionInstance inst{gg, embedding_from(opts, base_size, gg.size())};
            r = first ? reduce_general_I(chain, hg, inst) : reduce_general_II(chain, hg, inst);
            report["chain"] = to_json(chain);
        }
        else if (name == "components") {
            if (! opts.contains("component"))
                invalid_input("components needs \"component\"");
            r = reduce_components(gg, hg, opts["component"].get<std::size_t>());
        }
        else if (name == "connectify")
            r = make_strongly_connected(RetractionInstance{gg, embedding_from(opts, hg.size(), gg.size())}, hg);
        else
            invalid_input("unknown construction \"" + name + "\"");
        auto j = to_json(r);
        for (auto & [key, value] : j.items())
            report[key] = value;
        return SH_OK;
    });
}

sh_status sh_classify(const sh_digraph * h, char ** out)
{
    return guarded(out, [&](json & report) {
        need(h, "template");
        auto & hg = h->g;
        Classification c;
        if (hg.size() <= 3)
            c = classify_small_digraph(hg);
        else if (is_reflexive_tournament(hg))
            c = classify_reflexive_tournament(hg);
        else
            precondition_failed("classification covers digraphs on at most 3 vertices and reflexive tournaments");
        if (! verify_classification(hg, c))
            throw Error(ErrorKind::Internal, "classification witness failed re-verification");
        report = to_json(c);
        return SH_OK;
    });
}

sh_status sh_run_suite(char ** out)
{
    return guarded(out, [&](json & report) {
        auto items = run_suite();
        bool all = std::all_of(items.begin(), items.end(), [](auto & i) { return i.passed; });
        report = {{"passed", all}, {"items", to_json(items)}};
        return all ? SH_OK : SH_NO_WITNESS;
    });
}

sh_status sh_search_figures(char ** out)
{
    return guarded(out, [&](json & report) {
        auto s = search_figure_tournaments();
        report = to_json(s);
        bool found = ! s.one_way.empty() && ! s.full_spill.empty();
        return found ? SH_OK : SH_NO_WITNESS;
    });
}

} // extern "C"
