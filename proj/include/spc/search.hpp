#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "spc/graph.hpp"
#include "spc/labeling.hpp"
#include "spc/schemes.hpp"

namespace spc {

enum class SearchMode { Exists, Count, Collect };

struct SearchOptions {
    SearchMode mode = SearchMode::Exists;
    // Pin vertex 0 to +1 and double the count afterwards (global negation maps SPC
    // labelings to SPC labelings without fixed points). Unset means: on for Exists,
    // off for Count and Collect.
    std::optional<bool> fix_first_vertex;
    std::size_t max_vertices = 28;
    bool prune = true;
    unsigned threads = 1;
    // Collect mode stops storing labelings past this many (counting continues).
    std::size_t collect_limit = 1'000'000;

    bool fixes_first_vertex() const { return fix_first_vertex.value_or(mode == SearchMode::Exists); }
};

struct SearchResult {
    bool exists = false;
    std::optional<SignedLabeling> witness;   // first SPC labeling in enumeration order
    std::optional<std::uint64_t> count;      // Count / Collect only; already multiplied by symmetry_factor
    // Terminal nodes of the search tree: complete labelings reached plus pruned
    // subtrees. These partition the labeling space, so never more than 2^|V|.
    std::uint64_t nodes_explored = 0;
    unsigned symmetry_factor = 1;
    std::vector<SignedLabeling> collected;   // Collect only
    bool collection_truncated = false;

    friend bool operator==(const SearchResult&, const SearchResult&) = default;
};

// Hard ceiling from the 64-bit state encoding, independent of max_vertices.
inline constexpr std::size_t kMaxSearchableVertices = 63;

// Exhaustive search over all labelings; enumeration order is lexicographic over
// vertex index with +1 tried before -1. The result does not depend on `threads`.
// Throws TooLarge when the graph exceeds opts.max_vertices.
SearchResult search_spc(const Graph& g, const SearchOptions& opts);

// Calls `visit` with the bitmask (bit v set = +1) of every SPC labeling in
// enumeration order, single-threaded. Honours fix_first_vertex and prune; ignores
// mode and threads. Returns the number of labelings visited.
std::uint64_t for_each_spc_labeling(const Graph& g, const SearchOptions& opts,
                                    const std::function<void(std::uint64_t)>& visit);

std::uint64_t labeling_mask(const SignedLabeling& l);

struct OracleAgreement {
    bool scheme_is_spc = false;
    bool found_in_enumeration = false;
    bool oracle_exists = false;
    std::uint64_t oracle_count = 0;
    std::optional<SignedLabeling> witness;
    bool membership_agrees = false; // found_in_enumeration == scheme_is_spc
    bool existence_agrees = false;  // a claimed or demonstrated SPC graph has an SPC labeling
    bool agreement = false;
};

OracleAgreement verify_scheme_against_oracle(const SchemeOutput& s, std::size_t max_vertices = 28);

} // namespace spc
