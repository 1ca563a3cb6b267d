#include "spc/schemes.hpp"

#include <stdexcept>

#include "spc/errors.hpp"
#include "spc/families.hpp"

namespace spc {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw BadParameter(what);
}

Sign sign_if(bool positive) { return positive ? Sign::Positive : Sign::Negative; }

SchemeOutput finish(SchemeId id, Graph graph, SignedLabeling labeling, std::vector<ExpectedCounts> expected) {
    SchemeOutput out{id, std::move(graph), std::move(labeling), {}, std::move(expected)};
    out.report = evaluate(out.graph, out.labeling);
    return out;
}

bool equal_count(const std::optional<double>& claimed, std::size_t actual) {
    return claimed && *claimed == static_cast<double>(actual);
}

} // namespace

std::string_view to_string(ClaimMatch m) {
    switch (m) {
    case ClaimMatch::Exact: return "match";
    case ClaimMatch::EdgesTransposed: return "edges transposed";
    case ClaimMatch::Mismatch: return "MISMATCH";
    case ClaimMatch::VerdictOnly: return "verdict only";
    }
    return "?";
}

ClaimMatch compare(const ExpectedCounts& expected, const CordialityReport& report) {
    if (!expected.v_pos && !expected.v_neg && !expected.e_pos && !expected.e_neg) {
        return expected.claims_spc == report.is_spc ? ClaimMatch::VerdictOnly : ClaimMatch::Mismatch;
    }
    const bool vertices = equal_count(expected.v_pos, report.v_pos) && equal_count(expected.v_neg, report.v_neg);
    if (!vertices) return ClaimMatch::Mismatch;
    if (equal_count(expected.e_pos, report.e_pos) && equal_count(expected.e_neg, report.e_neg)) {
        return ClaimMatch::Exact;
    }
    if (equal_count(expected.e_pos, report.e_neg) && equal_count(expected.e_neg, report.e_pos)) {
        return ClaimMatch::EdgesTransposed;
    }
    return ClaimMatch::Mismatch;
}

bool consistent(const ExpectedCounts& expected, const CordialityReport& report) {
    switch (compare(expected, report)) {
    case ClaimMatch::Exact:
    case ClaimMatch::VerdictOnly: return true;
    case ClaimMatch::EdgesTransposed: return !expected.edge_orientation_pinned;
    case ClaimMatch::Mismatch: return false;
    }
    return false;
}

SchemeOutput spltg_star_scheme(std::size_t n) {
    require(n >= 1, "spltg-star needs n >= 1");
    Graph g = splitting_graph(star(n));
    const std::size_t duplicate = n + 1;
    SignedLabeling l(g.num_vertices(), Sign::Positive);
    l.set(0, Sign::Positive);
    l.set(duplicate, Sign::Negative);
    for (std::size_t i = 1; i <= n; ++i) {
        const Sign s = sign_if(i % 2 == 1);
        l.set(i, s);
        l.set(duplicate + i, -s);
    }

    const double nd = static_cast<double>(n);
    const double half_lo = n % 2 == 0 ? 1.5 * nd : (3.0 * nd - 1.0) / 2.0;
    const double half_hi = n % 2 == 0 ? 1.5 * nd : (3.0 * nd + 1.0) / 2.0;
    ExpectedCounts published{"published table", nd + 1, nd + 1, half_hi, half_lo, n % 2 == 0, true};
    // Original edges v0-vi carry the sign of vi; both duplicate edges per vi carry the
    // opposite sign, so e_pos = ceil(n/2) + 2*floor(n/2).
    const double derived_pos = static_cast<double>((n + 1) / 2 + 2 * (n / 2));
    ExpectedCounts derived{"derived", nd + 1, nd + 1, derived_pos, 3.0 * nd - derived_pos, true, true};
    return finish({SchemeKind::SpltgStar, n, {}}, std::move(g), std::move(l), {published, derived});
}

Sign bull_rule(std::size_t i) {
    if (i == 1) return Sign::Negative;
    if (i % 2 == 0) return Sign::Positive;
    if (i % 3 == 0) return Sign::Negative;
    if (i % 3 == 2) return Sign::Positive;
    throw std::logic_error("bull case rule does not cover index " + std::to_string(i));
}

SchemeOutput spltg_bull_scheme() {
    Graph g = splitting_graph(bull());
    constexpr std::size_t originals = 5;
    SignedLabeling l(g.num_vertices(), Sign::Positive);
    for (std::size_t i = 1; i <= originals; ++i) {
        const Sign s = bull_rule(i);
        l.set(i - 1, s);
        l.set(originals + i - 1, -s);
    }
    ExpectedCounts published{"published proof", 5, 5, 8, 7, true, true};
    return finish({SchemeKind::SpltgBull, 0, {}}, std::move(g), std::move(l), {published});
}

SchemeOutput path_square_scheme(std::size_t n) {
    require(n >= 3, "psquare needs n >= 3");
    Graph g = path_square(n);
    SignedLabeling l(n, Sign::Positive);
    // Vertex v_i (1-based) is +1 for odd i, so id 0 is +1.
    for (std::size_t id = 0; id < n; ++id) l.set(id, sign_if(id % 2 == 0));

    const double nd = static_cast<double>(n);
    const double v_pos = n % 2 == 0 ? nd / 2 : (nd + 1) / 2;
    const double v_neg = n % 2 == 0 ? nd / 2 : (nd - 1) / 2;
    ExpectedCounts published{"published proof", v_pos, v_neg, nd - 2, nd - 1, true, true};
    return finish({SchemeKind::PathSquare, n, {}}, std::move(g), std::move(l), {published});
}

SchemeOutput corona_scheme(std::size_t n) {
    require(n >= 3, "corona-c-3k1 needs n >= 3");
    Graph g = corona_empty(cycle(n), 3);
    SignedLabeling l(g.num_vertices(), Sign::Positive);
    // Blocks: u (cycle) +1, v -1, w +1, t -1.
    constexpr Sign block_sign[] = {Sign::Positive, Sign::Negative, Sign::Positive, Sign::Negative};
    for (std::size_t block = 0; block < 4; ++block) {
        for (std::size_t x = 0; x < n; ++x) l.set(block * n + x, block_sign[block]);
    }
    const double nd = static_cast<double>(n);
    ExpectedCounts published{"published proof", nd / 2, nd / 2, nd / 2, nd / 2, true, true};
    ExpectedCounts derived{"derived", 2 * nd, 2 * nd, 2 * nd, 2 * nd, true, true};
    return finish({SchemeKind::CoronaC3K1, n, {}}, std::move(g), std::move(l), {published, derived});
}

SchemeOutput helm_dumbbell_scheme(std::size_t k, HelmVariant variant) {
    Graph g = helm_dumbbell(k);
    constexpr std::size_t helm_size = 9; // apex, 4 rim, 4 pendants
    constexpr std::size_t internal = 5;  // apex + rim
    SignedLabeling l(g.num_vertices(), Sign::Positive);
    for (std::size_t i = 0; i < helm_size; ++i) {
        const bool is_internal = i < internal;
        l.set(i, sign_if(is_internal));
        l.set(helm_size + i, sign_if(!is_internal));
    }
    // Interior path vertex u_i sits at id 2*helm_size + (i - 2).
    for (std::size_t i = 2; i < k; ++i) l.set(2 * helm_size + (i - 2), sign_if(i % 2 == 0));

    switch (variant) {
    case HelmVariant::Literal: break;
    case HelmVariant::EndpointsPositive:
        l.set(0, Sign::Positive);
        l.set(helm_size, Sign::Positive);
        break;
    }
    ExpectedCounts published{"published proof", {}, {}, {}, {}, true, true};
    return finish({SchemeKind::HelmDumbbell, k, variant}, std::move(g), std::move(l), {published});
}

SchemeOutput run_scheme(const SchemeId& id) {
    switch (id.kind) {
    case SchemeKind::SpltgStar: return spltg_star_scheme(id.param);
    case SchemeKind::SpltgBull: return spltg_bull_scheme();
    case SchemeKind::PathSquare: return path_square_scheme(id.param);
    case SchemeKind::CoronaC3K1: return corona_scheme(id.param);
    case SchemeKind::HelmDumbbell: return helm_dumbbell_scheme(id.param, id.variant);
    }
    throw BadParameter("unknown scheme");
}

namespace {

struct SchemeName {
    std::string_view name;
    SchemeKind kind;
};

constexpr SchemeName scheme_names[] = {
    {"spltg-star", SchemeKind::SpltgStar},   {"spltg-bull", SchemeKind::SpltgBull},
    {"psquare", SchemeKind::PathSquare},     {"corona-c-3k1", SchemeKind::CoronaC3K1},
    {"helm-dumbbell", SchemeKind::HelmDumbbell},
};

} // namespace

SchemeKind parse_scheme_kind(std::string_view name) {
    for (const auto& entry : scheme_names) {
        if (entry.name == name) return entry.kind;
    }
    throw BadParameter("unknown scheme '" + std::string(name) + "'");
}

std::string_view scheme_name(SchemeKind kind) {
    for (const auto& entry : scheme_names) {
        if (entry.kind == kind) return entry.name;
    }
    return "?";
}

HelmVariant parse_helm_variant(std::string_view name) {
    if (name == "literal") return HelmVariant::Literal;
    if (name == "endpoints-positive") return HelmVariant::EndpointsPositive;
    throw UnknownVariant("unknown helm-dumbbell variant '" + std::string(name) +
                         "' (expected literal or endpoints-positive)");
}

std::string_view variant_name(HelmVariant v) {
    return v == HelmVariant::Literal ? "literal" : "endpoints-positive";
}

} // namespace spc
