#include <surjhom/surjhom.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::json;
using std::string;

namespace {

enum Exit { Ok = 0, NoWitness = 1, InputError = 2, SizeBound = 3, InternalError = 4 };

auto exit_code(sh_status s) -> int
{
    switch (s) {
    case SH_OK: return Ok;
    case SH_NO_WITNESS: return NoWitness;
    case SH_INVALID_INPUT:
    case SH_PRECONDITION: return InputError;
    case SH_SIZE_BOUND: return SizeBound;
    case SH_INTERNAL: return InternalError;
    }
    return InternalError;
}

struct Handle {
    sh_digraph * g = nullptr;
    ~Handle() { sh_digraph_free(g); }
};

struct Failure {
    sh_status status;
};

auto check(sh_status s) -> sh_status
{
    if (s != SH_OK && s != SH_NO_WITNESS)
        throw Failure{s};
    return s;
}

auto load(const string & source, Handle & h) -> void
{
    check(sh_digraph_load(source.c_str(), &h.g));
}

// Prints the JSON report on stdout and returns it parsed for the summary.
auto publish(sh_status s, char ** result) -> json
{
    check(s);
    auto text = *result;
    *result = nullptr;
    std::unique_ptr<char, void (*)(char *)> owned(text, sh_string_free);
    if (! text)
        return nullptr;
    std::cout << text << '\n';
    return json::parse(text);
}

// Inline JSON when it starts with '[' or '{', otherwise a file to read.
auto json_argument(const string & value) -> string
{
    if (! value.empty() && (value.front() == '[' || value.front() == '{'))
        return value;
    std::ifstream in(value);
    if (! in) {
        std::cerr << "cannot read " << value << '\n';
        throw Failure{SH_INVALID_INPUT};
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// "0,1,2" -> "[0,1,2]"; levels use ';' between lists.
auto comma_list(const string & value) -> json
{
    auto out = json::array();
    std::stringstream in(value);
    string item;
    while (std::getline(in, item, ','))
        if (! item.empty())
            out.push_back(std::stoul(item));
    return out;
}

auto vertex_list(const string & value) -> json
{
    if (! value.empty() && value.front() == '[')
        return json::parse(value);
    return comma_list(value);
}

auto summary(const string & line) -> void
{
    std::cerr << line << '\n';
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Homomorphism, polymorphism and gadget-reduction toolkit for small digraphs"};
    app.require_subcommand(1);
    std::size_t size_bound = 0, solver_bound = 0;
    app.add_option("--size-bound", size_bound, "Largest object to materialise (also SURJHOM_SIZE_BOUND)");
    app.add_option("--solver-bound", solver_bound, "Largest solver instance in vertices (also SURJHOM_SOLVER_BOUND)");

    string h_source, g_source, kind, extra, mode_flag, sub, cycle, levels, construction;
    std::size_t arity = 2, m = 0, component = 0;
    bool dot = false, dagger = false, wnu = false, majority = false, unary = false;

    auto analyze = app.add_subcommand("analyze", "Structure report for a digraph");
    analyze->add_option("H", h_source, "Digraph file or bundled:<name>")->required();
    analyze->add_flag("--dot", dot, "Also print a DOT rendering on standard error");

    auto solve = app.add_subcommand("solve", "Decide a homomorphism problem for G over template H");
    solve->add_option("kind", kind, "hom, surj, retract, compact, compact-strict or list")
        ->required()
        ->check(CLI::IsMember({"hom", "surj", "retract", "compact", "compact-strict", "list"}));
    solve->add_option("H", h_source, "Template")->required();
    solve->add_option("G", g_source, "Instance")->required();
    solve->add_option("--embedding", extra, "Retract: JSON array (or file) with the G-vertex of each H-vertex");
    solve->add_option("--lists", extra, "List: JSON array of lists (or file), one per G-vertex");

    auto poly = app.add_subcommand("poly", "Polymorphisms of H");
    poly->add_option("H", h_source, "Template")->required();
    poly->add_option("--arity", arity, "Arity k")->required();
    auto poly_modes = poly->add_option_group("mode");
    poly_modes->add_flag("--wnu", wnu, "Search for a weak near-unanimity polymorphism");
    poly_modes->add_flag("--majority", majority, "Search for a majority polymorphism");
    poly_modes->add_flag("--essentially-unary", unary, "Check that all polymorphisms are essentially unary");
    poly_modes->require_option(0, 1);

    auto gadget = app.add_subcommand("gadget", "Gadget digraphs");
    gadget->require_subcommand(1);
    auto cyl = gadget->add_subcommand("cyl", "The m-copy cylinder of directed m-cycles");
    cyl->add_option("m", m, "Cycle length")->required();
    cyl->add_flag("--dagger", dagger, "Also list the maps its retractions induce on the top copy");

    auto spill = app.add_subcommand("spill", "Spill set of a subtournament with a Hamilton cycle");
    spill->add_option("H", h_source, "Reflexive tournament")->required();
    spill->add_option("--sub", sub, "Subset, e.g. 0,1,2")->required();
    spill->add_option("--cycle", cycle, "Hamilton cycle of the subset, e.g. 0,1,2");

    auto reduce = app.add_subcommand("reduce", "Build a reduction instance");
    reduce->add_option("construction", construction, "base1, base2, gen1, gen2, components or connectify")
        ->required()
        ->check(CLI::IsMember({"base1", "base2", "gen1", "gen2", "components", "connectify"}));
    reduce->add_option("H", h_source, "Template")->required();
    reduce->add_option("G", g_source, "Source instance")->required();
    reduce->add_option("--sub", sub, "H_0 for the base cases, e.g. 0,1,2");
    reduce->add_option("--cycle", cycle, "Hamilton cycle of H_0");
    reduce->add_option("--levels", levels, "Chain levels for gen1/gen2, e.g. 1,3,4;0,1,2,3,4");
    reduce->add_option("--embedding", extra, "JSON array (or file) with the G-vertex of each template vertex");
    reduce->add_option("--component", component, "Strong component index for components");

    auto classify = app.add_subcommand("classify", "Complexity verdict with witnesses");
    classify->add_option("H", h_source, "Template")->required();

    auto verify = app.add_subcommand("verify-paper", "Run the bundled self-check suite");
    auto figures = app.add_subcommand("search-figures", "Search cross orientations of two reflexive 3-cycles");
    auto bundled = app.add_subcommand("bundled", "List the bundled digraph names");

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? Ok : InputError;
    }

    try {
        if (size_bound)
            check(sh_set_size_bound(size_bound));
        if (solver_bound)
            check(sh_set_solver_bound(solver_bound));
        char * out = nullptr;
        sh_status status = SH_OK;

        if (*analyze) {
            Handle h;
            load(h_source, h);
            auto r = publish(sh_analyze(h.g, &out), &out);
            summary(std::to_string(r["n"].get<int>()) + " vertices, " + std::to_string(r["edges"].get<int>())
                + " edges, endo-trivial: " + (r["endo_trivial"]["holds"].get<bool>() ? "yes" : "no")
                + ", retract-trivial: " + (r["retract_trivial"]["holds"].get<bool>() ? "yes" : "no"));
            if (dot) {
                check(sh_digraph_dot(h.g, &out));
                std::unique_ptr<char, void (*)(char *)> owned(out, sh_string_free);
                std::cerr << json::parse(out)["dot"].get<string>();
            }
        }
        else if (*solve) {
            Handle h, g;
            load(h_source, h);
            load(g_source, g);
            string arg = extra.empty() ? "" : json_argument(extra);
            if ((kind == "retract" || kind == "list") && arg.empty()) {
                std::cerr << kind << " needs " << (kind == "retract" ? "--embedding" : "--lists") << '\n';
                return InputError;
            }
            status = sh_solve(kind.c_str(), h.g, g.g, arg.empty() ? nullptr : arg.c_str(), &out);
            auto r = publish(status, &out);
            summary(kind + ": " + (r["exists"].get<bool>() ? "witness found" : "no witness"));
        }
        else if (*poly) {
            Handle h;
            load(h_source, h);
            string mode = wnu ? "wnu" : majority ? "majority" : unary ? "essentially-unary" : "enumerate";
            status = sh_poly(h.g, arity, mode.c_str(), &out);
            auto r = publish(status, &out);
            if (mode == "enumerate")
                summary(std::to_string(r["count"].get<int>()) + " polymorphisms of arity " + std::to_string(arity));
            else if (mode == "essentially-unary")
                summary(std::to_string(r["count"].get<int>()) + " polymorphisms, all essentially unary: "
                    + (r["holds"].get<bool>() ? "yes" : "no"));
            else
                summary(mode + ": " + (r["exists"].get<bool>() ? "found" : "none"));
        }
        else if (*cyl) {
            auto r = publish(sh_gadget_cyl(m, dagger ? 1 : 0, &out), &out);
            summary("Cyl_" + std::to_string(m) + ": " + std::to_string(r["digraph"]["n"].get<int>()) + " vertices, "
                + std::to_string(r["digraph"]["edges"].size()) + " edges");
        }
        else if (*spill) {
            Handle h;
            load(h_source, h);
            auto s = vertex_list(sub).dump();
            auto c = cycle.empty() ? string() : vertex_list(cycle).dump();
            auto r = publish(sh_spill(h.g, s.c_str(), c.empty() ? nullptr : c.c_str(), &out), &out);
            summary("spill " + r["spill"].dump() + (r["full"].get<bool>() ? " (full)" : ""));
        }
        else if (*reduce) {
            Handle h, g;
            load(h_source, h);
            load(g_source, g);
            json options = json::object();
            if (! sub.empty())
                options["sub"] = vertex_list(sub);
            if (! cycle.empty())
                options["cycle"] = vertex_list(cycle);
            if (! extra.empty())
                options["embedding"] = json::parse(json_argument(extra));
            if (! levels.empty()) {
                options["levels"] = json::array();
                std::stringstream in(levels);
                string level;
                while (std::getline(in, level, ';'))
                    options["levels"].push_back(comma_list(level));
            }
            if (reduce->count("--component"))
                options["component"] = component;
            auto text = options.dump();
            auto r = publish(sh_reduce(construction.c_str(), h.g, g.g, text.c_str(), &out), &out);
            summary(construction + ": " + std::to_string(r["digraph"]["n"].get<int>()) + " vertices, "
                + std::to_string(r["gadgets"].size()) + " gadgets; "
                + r["claim"]["source_problem"].get<string>() + " -> " + r["claim"]["target_problem"].get<string>());
        }
        else if (*classify) {
            Handle h;
            load(h_source, h);
            auto r = publish(sh_classify(h.g, &out), &out);
            summary("verdict: " + r["verdict"].get<string>());
        }
        else if (*verify) {
            status = sh_run_suite(&out);
            auto r = publish(status, &out);
            for (auto & item : r["items"]) {
                char line[512];
                std::snprintf(line, sizeof line, "%-4s %-22s %8.2fs  %s", item["passed"].get<bool>() ? "PASS" : "FAIL",
                    item["name"].get<string>().c_str(), item["seconds"].get<double>(),
                    item["detail"].get<string>().c_str());
                summary(line);
            }
        }
        else if (*figures) {
            status = sh_search_figures(&out);
            auto r = publish(status, &out);
            summary(std::to_string(r["one_way"].size()) + " one-way orientations, " + std::to_string(r["full_spill"].size())
                + " full-spill orientations");
        }
        else if (*bundled) {
            auto r = publish(sh_bundled_names(&out), &out);
            summary(std::to_string(r.size()) + " bundled digraphs");
        }
        return exit_code(status);
    }
    catch (const Failure & f) {
        std::cerr << "error: " << sh_last_error() << '\n';
        return exit_code(f.status);
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return InputError;
    }
}
