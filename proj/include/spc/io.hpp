#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "spc/graph.hpp"
#include "spc/labeling.hpp"
#include "spc/search.hpp"

namespace spc::io {

using Json = nlohmann::ordered_json;

// {"vertices": n, "edges": [[u,v], ...], "roles": {"id": "name", ...}}
// Edges are emitted in canonical order; "roles" is omitted when empty.
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

// {"signs": [1, -1, ...]}
Json labeling_to_json(const SignedLabeling& l);
SignedLabeling labeling_from_json(const Json& j);

Json report_to_json(const CordialityReport& r);
Json search_result_to_json(const SearchResult& r);

// Pretty-printed with a trailing newline; the form the CLI writes and prints.
std::string dump(const Json& j);

Json parse_json(std::string_view text);
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

Graph load_graph(const std::filesystem::path& path);
SignedLabeling load_labeling(const std::filesystem::path& path);

// Graphviz rendering. Nodes are named by id and labelled with role names; with a
// labeling, nodes show +1/-1 in two fill classes and edges are solid for an
// induced +1 and dashed for -1.
std::string to_dot(const Graph& g, const SignedLabeling* labeling = nullptr);

} // namespace spc::io
