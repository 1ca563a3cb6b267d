#include "spc/families.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <vector>

#include "spc/errors.hpp"

namespace spc {

namespace {

using Pairs = std::vector<std::pair<VertexId, VertexId>>;

void require(bool ok, const std::string& what) {
    if (!ok) throw BadParameter(what);
}

std::string indexed(std::string_view prefix, std::size_t i) {
    return std::string(prefix) + std::to_string(i);
}

// Hub 0, rim 1..n, pendants n+1..2n. `letter` names the copy (v or w).
void append_helm(Pairs& edges, RoleMap& roles, std::size_t n, VertexId base, std::string_view letter) {
    roles[base] = indexed(letter, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        const VertexId rim = base + i;
        const VertexId pendant = base + n + i;
        const VertexId next = base + (i % n) + 1;
        roles[rim] = indexed(letter, i);
        roles[pendant] = std::string(letter) + "'" + std::to_string(i);
        edges.emplace_back(base, rim);
        edges.emplace_back(rim, next);
        edges.emplace_back(rim, pendant);
    }
}

} // namespace

std::string primed(std::string_view role) {
    std::size_t split = 0;
    while (split < role.size() && std::isalpha(static_cast<unsigned char>(role[split]))) ++split;
    std::string out(role.substr(0, split));
    out += '\'';
    out += role.substr(split);
    return out;
}

Graph path(std::size_t n) {
    require(n >= 1, "path needs n >= 1");
    Pairs edges;
    RoleMap roles;
    for (std::size_t i = 0; i < n; ++i) {
        roles[i] = indexed("v", i + 1);
        if (i + 1 < n) edges.emplace_back(i, i + 1);
    }
    return make_graph(n, edges, std::move(roles));
}

Graph cycle(std::size_t n) {
    require(n >= 3, "cycle needs n >= 3");
    Pairs edges;
    RoleMap roles;
    for (std::size_t i = 0; i < n; ++i) {
        roles[i] = indexed("v", i + 1);
        edges.emplace_back(i, (i + 1) % n);
    }
    return make_graph(n, edges, std::move(roles));
}

Graph star(std::size_t n) {
    require(n >= 1, "star needs n >= 1");
    Pairs edges;
    RoleMap roles{{0, "v0"}};
    for (std::size_t i = 1; i <= n; ++i) {
        roles[i] = indexed("v", i);
        edges.emplace_back(0, i);
    }
    return make_graph(n + 1, edges, std::move(roles));
}

Graph wheel(std::size_t n) {
    require(n >= 3, "wheel needs n >= 3");
    Pairs edges;
    RoleMap roles{{0, "hub"}};
    for (std::size_t i = 1; i <= n; ++i) {
        roles[i] = indexed("v", i);
        edges.emplace_back(0, i);
        edges.emplace_back(i, (i % n) + 1);
    }
    return make_graph(n + 1, edges, std::move(roles));
}

Graph helm(std::size_t n) {
    require(n >= 3, "helm needs n >= 3");
    Pairs edges;
    RoleMap roles;
    append_helm(edges, roles, n, 0, "v");
    return make_graph(2 * n + 1, edges, std::move(roles));
}

Graph bull() {
    RoleMap roles;
    for (VertexId i = 0; i < 5; ++i) roles[i] = indexed("v", i + 1);
    return make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 3}}, std::move(roles));
}

Graph path_square(std::size_t n) {
    require(n >= 3, "path square needs n >= 3");
    Pairs edges;
    RoleMap roles;
    for (std::size_t i = 0; i < n; ++i) {
        roles[i] = indexed("v", i + 1);
        if (i + 1 < n) edges.emplace_back(i, i + 1);
        if (i + 2 < n) edges.emplace_back(i, i + 2);
    }
    return make_graph(n, edges, std::move(roles));
}

Graph splitting_graph(const Graph& g) {
    const std::size_t n = g.num_vertices();
    Pairs edges;
    edges.reserve(3 * g.num_edges());
    for (const auto& e : g.edges()) {
        edges.emplace_back(e.first, e.second);
        edges.emplace_back(n + e.first, e.second);
        edges.emplace_back(e.first, n + e.second);
    }
    // Duplicates are named v'i; when that clashes with an existing name (splitting a
    // helm, or a splitting graph again) every duplicate gets trailing primes instead.
    std::set<std::string> taken;
    for (const auto& [id, name] : g.roles()) taken.insert(name);
    auto duplicate_names = [&](std::size_t suffix_primes) {
        std::vector<std::string> names;
        for (const auto& [id, name] : g.roles()) {
            names.push_back(suffix_primes == 0 ? primed(name) : name + std::string(suffix_primes, '\''));
        }
        return names;
    };
    auto clashes = [&](const std::vector<std::string>& names) {
        return std::any_of(names.begin(), names.end(), [&](const std::string& s) { return taken.count(s) > 0; });
    };
    std::vector<std::string> names = duplicate_names(0);
    for (std::size_t primes = 1; clashes(names); ++primes) names = duplicate_names(primes);

    RoleMap roles;
    std::size_t i = 0;
    for (const auto& [id, name] : g.roles()) {
        roles[id] = name;
        roles[n + id] = names[i++];
    }
    return make_graph(2 * n, edges, std::move(roles));
}

Graph corona_empty(const Graph& g, std::size_t m) {
    require(m >= 1, "corona needs m >= 1 pendant copies");
    const std::size_t n = g.num_vertices();
    static constexpr std::string_view letters[] = {"v", "w", "t"};
    Pairs edges = edge_pairs(g);
    RoleMap roles;
    for (VertexId x = 0; x < n; ++x) {
        roles[x] = indexed("u", x + 1);
        for (std::size_t j = 0; j < m; ++j) {
            const VertexId pendant = n * (1 + j) + x;
            edges.emplace_back(x, pendant);
            roles[pendant] = m <= 3 ? indexed(letters[j], x + 1)
                                    : "p" + std::to_string(j + 1) + "_" + std::to_string(x + 1);
        }
    }
    return make_graph(n * (1 + m), edges, std::move(roles));
}

Graph helm_dumbbell(std::size_t k) {
    require(k >= 2, "helm dumbbell needs a path of k >= 2 vertices");
    constexpr std::size_t rim = 4;
    constexpr VertexId first_apex = 0;
    constexpr VertexId second_apex = 2 * rim + 1;
    constexpr VertexId interior_base = 2 * (2 * rim + 1);

    Pairs edges;
    RoleMap roles;
    append_helm(edges, roles, rim, first_apex, "v");
    append_helm(edges, roles, rim, second_apex, "w");

    // Path u_1 = v0, u_2 .. u_{k-1} interior, u_k = w0.
    VertexId previous = first_apex;
    for (std::size_t i = 2; i < k; ++i) {
        const VertexId u = interior_base + (i - 2);
        roles[u] = indexed("u", i);
        edges.emplace_back(previous, u);
        previous = u;
    }
    edges.emplace_back(previous, second_apex);
    return make_graph(interior_base + (k - 2), edges, std::move(roles));
}

} // namespace spc
