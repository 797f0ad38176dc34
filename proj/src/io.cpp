#include <surjhom/catalogue.hpp>
#include <surjhom/error.hpp>
#include <surjhom/io.hpp>

#include <fstream>
#include <sstream>

namespace surjhom {

using std::size_t;
using std::string;
using std::vector;

namespace {
    auto as_vertex(const json & j, std::string_view what) -> Vertex
    {
        if (! j.is_number_integer() || j.get<long long>() < 0 || j.get<long long>() > 0xffffffffLL)
            invalid_input(string(what) + " must be a non-negative integer");
        return static_cast<Vertex>(j.get<long long>());
    }
}

auto to_json(const Digraph & g) -> json
{
    json j;
    j["n"] = g.size();
    auto edges = json::array();
    for (auto & [u, v] : g.edges())
        edges.push_back({u, v});
    j["edges"] = std::move(edges);
    if (g.has_names())
        j["names"] = g.names();
    return j;
}

auto digraph_from_json(const json & j) -> Digraph
{
    if (! j.is_object())
        invalid_input("digraph JSON must be an object");
    if (! j.contains("n"))
        invalid_input("digraph JSON lacks \"n\"");
    auto n = as_vertex(j["n"], "\"n\"");
    vector<Edge> edges;
    if (j.contains("edges")) {
        if (! j["edges"].is_array())
            invalid_input("\"edges\" must be an array");
        for (auto & e : j["edges"]) {
            if (! e.is_array() || e.size() != 2)
                invalid_input("each edge must be a pair [u, v]");
            edges.emplace_back(as_vertex(e[0], "edge endpoint"), as_vertex(e[1], "edge endpoint"));
        }
    }
    vector<string> names;
    if (j.contains("names")) {
        if (! j["names"].is_array())
            invalid_input("\"names\" must be an array of strings");
        for (auto & s : j["names"]) {
            if (! s.is_string())
                invalid_input("\"names\" must be an array of strings");
            names.push_back(s.get<string>());
        }
    }
    return Digraph(n, std::move(edges), std::move(names));
}

auto digraph_from_text(std::string_view text) -> Digraph
{
    std::istringstream in{string(text)};
    string line;
    std::optional<size_t> n;
    vector<Edge> edges;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == string::npos || line[first] == '#')
            continue;
        std::istringstream fields(line);
        long long a = -1, b = -1;
        string rest;
        if (! n) {
            if (! (fields >> a) || a < 0 || (fields >> rest))
                invalid_input("line " + std::to_string(line_no) + ": expected the vertex count");
            n = static_cast<size_t>(a);
            continue;
        }
        if (! (fields >> a >> b) || a < 0 || b < 0 || (fields >> rest))
            invalid_input("line " + std::to_string(line_no) + ": expected \"u v\"");
        edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    if (! n)
        invalid_input("empty digraph description");
    return Digraph(*n, std::move(edges));
}

auto to_text(const Digraph & g) -> string
{
    std::ostringstream out;
    out << g.size() << '\n';
    for (auto & [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

auto parse_digraph(std::string_view content) -> Digraph
{
    auto first = content.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && content[first] == '{') {
        json j;
        try {
            j = json::parse(content);
        }
        catch (const json::parse_error & e) {
            invalid_input(string("malformed JSON: ") + e.what());
        }
        return digraph_from_json(j);
    }
    return digraph_from_text(content);
}

auto read_file(const string & path) -> string
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        invalid_input("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

auto load_digraph(const string & source) -> Digraph
{
    constexpr std::string_view scheme = "bundled:";
    if (source.starts_with(scheme))
        return bundled_digraph(source.substr(scheme.size()));
    return parse_digraph(read_file(source));
}

auto to_dot(const Digraph & g, std::string_view title) -> string
{
    std::ostringstream out;
    out << "digraph \"" << title << "\" {\n";
    for (Vertex v = 0; v < g.size(); ++v) {
        out << "  " << v;
        if (g.has_names())
            out << " [label=\"" << g.name(v) << "\"]";
        out << ";\n";
    }
    for (auto & [u, v] : g.edges())
        out << "  " << u << " -> " << v << ";\n";
    out << "}\n";
    return out.str();
}

auto to_json(const VertexMap & f) -> json
{
    return json(f.image);
}

auto vertex_list_from_json(const json & j, std::string_view what) -> vector<Vertex>
{
    if (! j.is_array())
        invalid_input(string(what) + " must be an array of vertices");
    vector<Vertex> result;
    for (auto & x : j)
        result.push_back(as_vertex(x, what));
    return result;
}

} // namespace surjhom
