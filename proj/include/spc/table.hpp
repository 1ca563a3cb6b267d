#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spc/labeling.hpp"
#include "spc/schemes.hpp"

namespace spc {

struct SizeRange {
    std::size_t lo = 0;
    std::size_t hi = 0;
};

// "1..10" or a single "8". Throws BadParameter.
SizeRange parse_range(std::string_view text);

struct TableRow {
    std::size_t n = 0;
    bool n_even = false;
    CordialityReport report;
    std::size_t vertex_delta_abs = 0;
    std::size_t edge_delta_abs = 0;
    // Claims attached by the scheme, paired with how the computed counts compare.
    std::vector<std::pair<ExpectedCounts, ClaimMatch>> claims;
    // |delta| > 1, or a claim that the computed counts contradict.
    bool flagged = false;
};

TableRow make_row(const SchemeOutput& s);
// One row per parameter value in the range. SpltgBull takes no parameter and is rejected.
std::vector<TableRow> make_table(SchemeKind kind, SizeRange range, HelmVariant variant = HelmVariant::Literal);

// Aligned columns headed like the published table (v_α(1), v_α(-1), ...), with
// one column per claim source and a footnote for each flagged row.
std::string render_table_text(const std::vector<TableRow>& rows);
// ASCII header: n,parity,v_pos,v_neg,vertex_delta_abs,e_pos,e_neg,edge_delta_abs,spc,
// then published_* columns and published_match, then flagged.
std::string render_table_csv(const std::vector<TableRow>& rows);

// Single-report variant of the text table plus the one-line summary.
std::string render_report_text(const CordialityReport& r);

} // namespace spc
