#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spc/graph.hpp"
#include "spc/labeling.hpp"

namespace spc {

enum class SchemeKind { SpltgStar, SpltgBull, PathSquare, CoronaC3K1, HelmDumbbell };

// Readings of the helm-dumbbell construction. The published description labels the
// second apex both -1 (as a helm-internal vertex) and +1 (as a path end), so each
// reading is kept separate and evaluated honestly.
enum class HelmVariant {
    Literal,           // apexes keep their helm-internal labels (+1 and -1)
    EndpointsPositive, // both apexes forced to +1
};

struct SchemeId {
    SchemeKind kind = SchemeKind::SpltgStar;
    std::size_t param = 0; // n, or k for HelmDumbbell; unused for SpltgBull
    HelmVariant variant = HelmVariant::Literal;
};

// Counts somebody claims for a scheme. Values are doubles because some published
// counts are not integers for every parameter (n/2 with n odd).
struct ExpectedCounts {
    std::string provenance; // "published table", "published proof", "derived"
    std::optional<double> v_pos, v_neg, e_pos, e_neg;
    // When false only the multiset {e_pos, e_neg} is asserted.
    bool edge_orientation_pinned = true;
    bool claims_spc = true;
};

enum class ClaimMatch {
    Exact,
    EdgesTransposed, // counts agree but e_pos/e_neg are swapped
    Mismatch,
    VerdictOnly,     // no counts claimed; only the SPC verdict is compared
};

std::string_view to_string(ClaimMatch m);
ClaimMatch compare(const ExpectedCounts& expected, const CordialityReport& report);
// True when the claim holds for the report, honouring edge_orientation_pinned.
bool consistent(const ExpectedCounts& expected, const CordialityReport& report);

struct SchemeOutput {
    SchemeId id;
    Graph graph;
    SignedLabeling labeling;
    CordialityReport report;
    std::vector<ExpectedCounts> expected;
};

SchemeOutput spltg_star_scheme(std::size_t n);
SchemeOutput spltg_bull_scheme();
SchemeOutput path_square_scheme(std::size_t n);
SchemeOutput corona_scheme(std::size_t n);
SchemeOutput helm_dumbbell_scheme(std::size_t k, HelmVariant variant);

SchemeOutput run_scheme(const SchemeId& id);

// Case rule for the bull graph's original vertices v1..v5 (1-based index).
Sign bull_rule(std::size_t i);

// CLI names: spltg-star, spltg-bull, psquare, corona-c-3k1, helm-dumbbell.
SchemeKind parse_scheme_kind(std::string_view name);
std::string_view scheme_name(SchemeKind kind);
// literal, endpoints-positive. Throws UnknownVariant.
HelmVariant parse_helm_variant(std::string_view name);
std::string_view variant_name(HelmVariant v);
constexpr HelmVariant all_helm_variants[] = {HelmVariant::Literal, HelmVariant::EndpointsPositive};

} // namespace spc
