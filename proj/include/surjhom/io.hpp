#pragma once

#include <surjhom/digraph.hpp>

#include <json.hpp>

#include <string>
#include <string_view>

namespace surjhom {

using json = nlohmann::json;

/// {"n": n, "edges": [[u,v],...], "names": [...]?} with edges sorted.
auto to_json(const Digraph & g) -> json;
auto digraph_from_json(const json & j) -> Digraph;

/// First line n, then one "u v" pair per line. Blank lines and lines starting
/// with '#' are skipped.
auto digraph_from_text(std::string_view text) -> Digraph;
auto to_text(const Digraph & g) -> std::string;

/// JSON when the first non-blank character is '{', plain text otherwise.
auto parse_digraph(std::string_view content) -> Digraph;

/// Reads a file, or a catalogue entry when source starts with "bundled:".
auto load_digraph(const std::string & source) -> Digraph;

auto read_file(const std::string & path) -> std::string;

/// Graphviz rendering; loops drawn explicitly.
auto to_dot(const Digraph & g, std::string_view title = "H") -> std::string;

auto to_json(const VertexMap & f) -> json;
auto vertex_list_from_json(const json & j, std::string_view what) -> std::vector<Vertex>;

} // namespace surjhom
