#include "spc/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "spc/errors.hpp"

namespace spc {

namespace {

std::string describe(const std::vector<Violation>& violations) {
    std::ostringstream out;
    for (std::size_t i = 0; i < violations.size(); ++i) {
        if (i > 0) out << "; ";
        out << violations[i].message;
    }
    return out.str();
}

} // namespace

std::span<const VertexId> Graph::neighbors(VertexId v) const {
    if (v >= num_vertices_) {
        throw InvalidVertex("vertex " + std::to_string(v) + " out of range for graph with " +
                            std::to_string(num_vertices_) + " vertices");
    }
    return adjacency_[v];
}

std::size_t Graph::degree(VertexId v) const { return neighbors(v).size(); }

bool Graph::has_edge(VertexId a, VertexId b) const {
    if (a == b || a >= num_vertices_ || b >= num_vertices_) return false;
    return std::binary_search(edges_.begin(), edges_.end(), Edge(a, b));
}

std::string Graph::name(VertexId v) const {
    if (auto it = roles_.find(v); it != roles_.end()) return it->second;
    return std::to_string(v);
}

std::optional<VertexId> Graph::find_role(std::string_view role) const {
    for (const auto& [id, name] : roles_) {
        if (name == role) return id;
    }
    return std::nullopt;
}

std::vector<Violation> validate(std::size_t num_vertices,
                                std::span<const std::pair<VertexId, VertexId>> edges,
                                const RoleMap& roles) {
    std::vector<Violation> out;
    std::set<Edge> seen;
    for (const auto& [a, b] : edges) {
        if (a == b) {
            out.push_back({Violation::Kind::SelfLoop, "self-loop at " + std::to_string(a)});
            continue;
        }
        if (a >= num_vertices || b >= num_vertices) {
            out.push_back({Violation::Kind::OutOfRange,
                           "out-of-range endpoint in edge (" + std::to_string(a) + "," +
                               std::to_string(b) + ") for " + std::to_string(num_vertices) +
                               " vertices"});
            continue;
        }
        if (!seen.insert(Edge(a, b)).second) {
            out.push_back({Violation::Kind::DuplicateEdge,
                           "duplicate edge (" + std::to_string(a) + "," + std::to_string(b) + ")"});
        }
    }
    std::set<std::string_view> names;
    for (const auto& [id, name] : roles) {
        if (id >= num_vertices) {
            out.push_back({Violation::Kind::RoleOutOfRange,
                           "role '" + name + "' names missing vertex " + std::to_string(id)});
        }
        if (!names.insert(name).second) {
            out.push_back({Violation::Kind::DuplicateRole, "role '" + name + "' used twice"});
        }
    }
    return out;
}

std::vector<Violation> validate(const Graph& g) {
    const auto pairs = edge_pairs(g);
    return validate(g.num_vertices(), pairs, g.roles());
}

Graph make_graph(std::size_t num_vertices,
                 std::span<const std::pair<VertexId, VertexId>> edges,
                 RoleMap roles) {
    std::vector<Violation> edge_problems;
    std::vector<Violation> role_problems;
    for (auto& v : validate(num_vertices, edges, roles)) {
        switch (v.kind) {
        case Violation::Kind::DuplicateEdge:
            break;
        case Violation::Kind::SelfLoop:
        case Violation::Kind::OutOfRange:
            edge_problems.push_back(std::move(v));
            break;
        case Violation::Kind::DuplicateRole:
        case Violation::Kind::RoleOutOfRange:
            role_problems.push_back(std::move(v));
            break;
        }
    }
    if (!edge_problems.empty()) throw InvalidEdge(describe(edge_problems));
    if (!role_problems.empty()) throw InvalidRole(describe(role_problems));

    Graph g;
    g.num_vertices_ = num_vertices;
    g.edges_.reserve(edges.size());
    for (const auto& [a, b] : edges) g.edges_.emplace_back(a, b);
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

    g.adjacency_.assign(num_vertices, {});
    for (const auto& e : g.edges_) {
        g.adjacency_[e.first].push_back(e.second);
        g.adjacency_[e.second].push_back(e.first);
    }
    for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
    g.roles_ = std::move(roles);
    return g;
}

Graph make_graph(std::size_t num_vertices,
                 std::initializer_list<std::pair<VertexId, VertexId>> edges,
                 RoleMap roles) {
    return make_graph(num_vertices, std::span(edges.begin(), edges.size()), std::move(roles));
}

std::size_t degree(const Graph& g, VertexId v) { return g.degree(v); }

std::vector<std::pair<VertexId, VertexId>> edge_pairs(const Graph& g) {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(g.num_edges());
    for (const auto& e : g.edges()) out.emplace_back(e.first, e.second);
    return out;
}

} // namespace spc
