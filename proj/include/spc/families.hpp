#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "spc/graph.hpp"

namespace spc {

// Constructors for the graph families used by the labeling schemes. Every
// constructor fills the role map with the conventional vertex names
// (v0 for an apex, v'3 for the duplicate of v3, u/v/w/t for corona vertices).

Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph star(std::size_t n);
Graph wheel(std::size_t n);
Graph helm(std::size_t n);
Graph bull();
Graph path_square(std::size_t n);

// Adds a duplicate v' (id |V|+v) adjacent to exactly the neighbours of v.
Graph splitting_graph(const Graph& g);

// Attaches m pendant vertices to every vertex of g (corona with m copies of K_1).
// Copy j of the pendants occupies ids |V|*(1+j) .. |V|*(2+j)-1.
Graph corona_empty(const Graph& g, std::size_t m);

// Two helm(4) copies with apexes joined by a path on k vertices. The path's end
// vertices are the apexes themselves; the k-2 interior vertices come last.
Graph helm_dumbbell(std::size_t k);

enum class FamilyKind {
    Path,
    Cycle,
    Star,
    Wheel,
    Helm,
    Bull,
    PathSquare,
    SplittingOf,
    CoronaEmpty,
    HelmDumbbell,
};

// Declarative family description. `size` is n (or k for HelmDumbbell), `copies`
// is m for CoronaEmpty, and `inner` is the operand of SplittingOf / CoronaEmpty.
struct FamilySpec {
    FamilyKind kind = FamilyKind::Path;
    std::size_t size = 0;
    std::size_t copies = 0;
    std::shared_ptr<const FamilySpec> inner;

    static FamilySpec sized(FamilyKind kind, std::size_t size);
    static FamilySpec bull_graph();
    static FamilySpec splitting_of(FamilySpec inner);
    static FamilySpec corona_of(FamilySpec inner, std::size_t copies);

    friend bool operator==(const FamilySpec& a, const FamilySpec& b);
};

Graph build(const FamilySpec& spec);

// Text form: path:n cycle:n star:n wheel:n helm:n bull psquare:n
//            spltg(<spec>) corona(<spec>,m) helmdumbbell:k
// Throws ParseError on malformed text; parameter bounds are checked by build().
FamilySpec parse_family_spec(std::string_view text);
std::string to_string(const FamilySpec& spec);

// "v3" -> "v'3", "v'1" -> "v''1", "hub" -> "hub'".
std::string primed(std::string_view role);

} // namespace spc
