#include "spc/io.hpp"

#include <fstream>
#include <sstream>

#include "spc/errors.hpp"

namespace spc::io {

namespace {

std::size_t as_index(const Json& j, std::string_view what) {
    if (!j.is_number_integer() || j.get<long long>() < 0) {
        throw ParseError(std::string(what) + " must be a non-negative integer, got " + j.dump());
    }
    return j.get<std::size_t>();
}

std::string dot_quote(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

Json graph_to_json(const Graph& g) {
    Json j;
    j["vertices"] = g.num_vertices();
    Json edges = Json::array();
    for (const auto& e : g.edges()) edges.push_back({e.first, e.second});
    j["edges"] = std::move(edges);
    if (!g.roles().empty()) {
        Json roles = Json::object();
        for (const auto& [id, name] : g.roles()) roles[std::to_string(id)] = name;
        j["roles"] = std::move(roles);
    }
    return j;
}

Graph graph_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
        throw ParseError("graph JSON needs \"vertices\" and \"edges\"");
    }
    const std::size_t n = as_index(j["vertices"], "vertices");
    const Json& edges = j["edges"];
    if (!edges.is_array()) throw ParseError("\"edges\" must be an array");
    std::vector<std::pair<VertexId, VertexId>> pairs;
    pairs.reserve(edges.size());
    for (const Json& e : edges) {
        if (!e.is_array() || e.size() != 2) throw ParseError("edge must be a [u, v] pair, got " + e.dump());
        pairs.emplace_back(as_index(e[0], "edge endpoint"), as_index(e[1], "edge endpoint"));
    }
    RoleMap roles;
    if (j.contains("roles")) {
        const Json& r = j["roles"];
        if (!r.is_object()) throw ParseError("\"roles\" must be an object");
        for (const auto& [key, value] : r.items()) {
            std::size_t id = 0;
            try {
                std::size_t used = 0;
                id = std::stoul(key, &used);
                if (used != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw ParseError("role key '" + key + "' is not a vertex id");
            }
            if (!value.is_string()) throw ParseError("role for vertex " + key + " must be a string");
            roles[id] = value.get<std::string>();
        }
    }
    return make_graph(n, pairs, std::move(roles));
}

Json labeling_to_json(const SignedLabeling& l) {
    Json j;
    j["signs"] = l.to_ints();
    return j;
}

SignedLabeling labeling_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("signs") || !j["signs"].is_array()) {
        throw ParseError("labeling JSON needs a \"signs\" array");
    }
    std::vector<int> values;
    for (const Json& s : j["signs"]) {
        if (!s.is_number_integer()) throw ParseError("sign must be 1 or -1, got " + s.dump());
        values.push_back(s.get<int>());
    }
    try {
        return SignedLabeling::from_ints(values);
    } catch (const BadParameter& e) {
        throw ParseError(e.what());
    }
}

Json report_to_json(const CordialityReport& r) {
    Json j;
    j["v_pos"] = r.v_pos;
    j["v_neg"] = r.v_neg;
    j["e_pos"] = r.e_pos;
    j["e_neg"] = r.e_neg;
    j["vertex_delta"] = r.vertex_delta;
    j["edge_delta"] = r.edge_delta;
    j["is_spc"] = r.is_spc;
    return j;
}

Json search_result_to_json(const SearchResult& r) {
    Json j;
    j["exists"] = r.exists;
    j["count"] = r.count ? Json(*r.count) : Json(nullptr);
    j["nodes_explored"] = r.nodes_explored;
    j["symmetry_factor"] = r.symmetry_factor;
    j["witness"] = r.witness ? labeling_to_json(*r.witness)["signs"] : Json(nullptr);
    if (!r.collected.empty() || r.collection_truncated) {
        Json all = Json::array();
        for (const auto& l : r.collected) all.push_back(l.to_ints());
        j["collected"] = std::move(all);
        j["collection_truncated"] = r.collection_truncated;
    }
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out << contents;
    if (!out) throw IoError("failed writing '" + path.string() + "'");
}

Graph load_graph(const std::filesystem::path& path) { return graph_from_json(parse_json(read_file(path))); }

SignedLabeling load_labeling(const std::filesystem::path& path) {
    return labeling_from_json(parse_json(read_file(path)));
}

std::string to_dot(const Graph& g, const SignedLabeling* labeling) {
    if (labeling && labeling->size() != g.num_vertices()) {
        throw LengthMismatch("labeling has " + std::to_string(labeling->size()) + " signs but graph has " +
                             std::to_string(g.num_vertices()) + " vertices");
    }
    std::ostringstream out;
    out << "graph G {\n";
    out << "  node [shape=circle];\n";
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        out << "  " << v << " [";
        if (labeling) {
            const bool positive = (*labeling)[v] == Sign::Positive;
            out << "label=\"" << (positive ? "+1" : "-1") << "\", xlabel=" << dot_quote(g.name(v))
                << ", class=\"" << (positive ? "pos" : "neg") << "\", style=filled, fillcolor=\""
                << (positive ? "white" : "gray70") << "\"";
        } else {
            out << "label=" << dot_quote(g.name(v));
        }
        out << "];\n";
    }
    for (const auto& e : g.edges()) {
        out << "  " << e.first << " -- " << e.second;
        if (labeling) {
            const Sign s = induced_edge_sign((*labeling)[e.first], (*labeling)[e.second]);
            out << " [style=" << (s == Sign::Positive ? "solid" : "dashed") << "]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace spc::io
