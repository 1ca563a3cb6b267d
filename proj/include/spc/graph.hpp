#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spc {

using VertexId = std::size_t;

// Unordered pair stored canonically with first < second.
struct Edge {
    VertexId first = 0;
    VertexId second = 0;

    Edge() = default;
    Edge(VertexId a, VertexId b) : first(a < b ? a : b), second(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

using RoleMap = std::map<VertexId, std::string>;

struct Violation {
    enum class Kind { SelfLoop, OutOfRange, DuplicateEdge, DuplicateRole, RoleOutOfRange };
    Kind kind;
    std::string message;
};

// Undirected simple graph on vertices 0..num_vertices()-1. Immutable once built;
// the only way to obtain one is make_graph(), which validates its input.
class Graph {
public:
    Graph() = default;

    std::size_t num_vertices() const { return num_vertices_; }
    std::size_t num_edges() const { return edges_.size(); }

    // Sorted by (first, second).
    std::span<const Edge> edges() const { return edges_; }
    std::span<const VertexId> neighbors(VertexId v) const;

    std::size_t degree(VertexId v) const;
    bool has_edge(VertexId a, VertexId b) const;

    const RoleMap& roles() const { return roles_; }
    // Role name of v, or its decimal index when no role is recorded.
    std::string name(VertexId v) const;
    // Vertex carrying the given role name, if any.
    std::optional<VertexId> find_role(std::string_view role) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.num_vertices_ == b.num_vertices_ && a.edges_ == b.edges_ && a.roles_ == b.roles_;
    }

private:
    friend Graph make_graph(std::size_t, std::span<const std::pair<VertexId, VertexId>>, RoleMap);

    std::size_t num_vertices_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<VertexId>> adjacency_;
    RoleMap roles_;
};

// Throws InvalidEdge on a self-loop or out-of-range endpoint and InvalidRole on a
// role naming a missing vertex or a name used twice. Duplicate pairs collapse.
Graph make_graph(std::size_t num_vertices,
                 std::span<const std::pair<VertexId, VertexId>> edges,
                 RoleMap roles = {});

Graph make_graph(std::size_t num_vertices,
                 std::initializer_list<std::pair<VertexId, VertexId>> edges,
                 RoleMap roles = {});

// Lists every violation of the simple-graph invariants in raw input. Duplicate edges
// are reported here even though make_graph() tolerates them.
std::vector<Violation> validate(std::size_t num_vertices,
                                std::span<const std::pair<VertexId, VertexId>> edges,
                                const RoleMap& roles = {});

std::vector<Violation> validate(const Graph& g);

std::size_t degree(const Graph& g, VertexId v);

std::vector<std::pair<VertexId, VertexId>> edge_pairs(const Graph& g);

} // namespace spc
