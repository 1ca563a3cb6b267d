#include "spc/table.hpp"

#include <charconv>
#include <iomanip>
#include <sstream>

#include "spc/errors.hpp"

namespace spc {

namespace {

std::size_t parse_count(std::string_view text, std::string_view whole) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw BadParameter("bad range '" + std::string(whole) + "', expected LO..HI");
    }
    return value;
}

// Terminal columns, counting UTF-8 code points rather than bytes.
std::size_t display_width(std::string_view s) {
    std::size_t w = 0;
    for (unsigned char c : s) w += (c & 0xC0) != 0x80;
    return w;
}

std::string pad_left(std::string_view s, std::size_t width) {
    const std::size_t w = display_width(s);
    return std::string(width > w ? width - w : 0, ' ') + std::string(s);
}

std::string format_count(const std::optional<double>& v) {
    if (!v) return "-";
    std::ostringstream out;
    out << *v;
    return out.str();
}

std::size_t abs_delta(std::int64_t d) { return static_cast<std::size_t>(d < 0 ? -d : d); }

const ExpectedCounts* published_claim(const TableRow& row) {
    for (const auto& [claim, match] : row.claims) {
        if (claim.provenance.rfind("published", 0) == 0) return &claim;
    }
    return nullptr;
}

void render_grid(std::ostringstream& out, const std::vector<std::vector<std::string>>& grid) {
    std::vector<std::size_t> widths;
    for (const auto& line : grid) {
        widths.resize(std::max(widths.size(), line.size()), 0);
        for (std::size_t c = 0; c < line.size(); ++c) widths[c] = std::max(widths[c], display_width(line[c]));
    }
    for (const auto& line : grid) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            if (c > 0) out << "  ";
            out << pad_left(line[c], widths[c]);
        }
        out << "\n";
    }
}

} // namespace

SizeRange parse_range(std::string_view text) {
    const auto dots = text.find("..");
    SizeRange r;
    if (dots == std::string_view::npos) {
        r.lo = r.hi = parse_count(text, text);
    } else {
        r.lo = parse_count(text.substr(0, dots), text);
        r.hi = parse_count(text.substr(dots + 2), text);
    }
    if (r.lo > r.hi) throw BadParameter("empty range '" + std::string(text) + "'");
    return r;
}

TableRow make_row(const SchemeOutput& s) {
    TableRow row;
    row.n = s.id.param;
    row.n_even = s.id.param % 2 == 0;
    row.report = s.report;
    row.vertex_delta_abs = abs_delta(s.report.vertex_delta);
    row.edge_delta_abs = abs_delta(s.report.edge_delta);
    row.flagged = row.vertex_delta_abs > 1 || row.edge_delta_abs > 1;
    for (const auto& claim : s.expected) {
        row.claims.emplace_back(claim, compare(claim, s.report));
        row.flagged = row.flagged || !consistent(claim, s.report);
    }
    return row;
}

std::vector<TableRow> make_table(SchemeKind kind, SizeRange range, HelmVariant variant) {
    if (kind == SchemeKind::SpltgBull) throw BadParameter("spltg-bull has no size parameter to tabulate");
    std::vector<TableRow> rows;
    for (std::size_t n = range.lo; n <= range.hi; ++n) rows.push_back(make_row(run_scheme({kind, n, variant})));
    return rows;
}

std::string render_table_text(const std::vector<TableRow>& rows) {
    std::vector<std::vector<std::string>> grid;
    std::vector<std::string> header{"n", "parity", "v_α(1)", "v_α(-1)", "|v_α(-1)-v_α(1)|",
                                    "e_α*(1)", "e_α*(-1)", "|e_α*(-1)-e_α*(1)|", "verdict"};
    std::vector<std::string> sources;
    if (!rows.empty()) {
        for (const auto& [claim, match] : rows.front().claims) sources.push_back(claim.provenance);
    }
    for (const auto& src : sources) header.push_back(src);
    grid.push_back(header);

    std::ostringstream notes;
    for (const auto& row : rows) {
        const auto& r = row.report;
        std::vector<std::string> line{std::to_string(row.n), row.n_even ? "even" : "odd",
                                      std::to_string(r.v_pos), std::to_string(r.v_neg),
                                      std::to_string(row.vertex_delta_abs), std::to_string(r.e_pos),
                                      std::to_string(r.e_neg), std::to_string(row.edge_delta_abs),
                                      r.is_spc ? "SPC" : "not SPC"};
        for (const auto& [claim, match] : row.claims) {
            line.emplace_back(consistent(claim, r) ? std::string(to_string(match))
                                                   : std::string(to_string(match)) + " (!)");
        }
        grid.push_back(std::move(line));
        if (!row.flagged) continue;
        for (const auto& [claim, match] : row.claims) {
            if (consistent(claim, r)) continue;
            notes << "n=" << row.n << ": " << claim.provenance << " claims v " << format_count(claim.v_pos)
                  << "/" << format_count(claim.v_neg) << ", e " << format_count(claim.e_pos) << "/"
                  << format_count(claim.e_neg) << (claim.claims_spc ? ", SPC" : "") << "; computed "
                  << summary(r) << "\n";
        }
        if (row.vertex_delta_abs > 1 || row.edge_delta_abs > 1) {
            notes << "n=" << row.n << ": balance condition violated\n";
        }
    }

    std::ostringstream out;
    render_grid(out, grid);
    const std::string flagged = notes.str();
    if (!flagged.empty()) out << "\nflagged rows:\n" << flagged;
    return out.str();
}

std::string render_table_csv(const std::vector<TableRow>& rows) {
    std::ostringstream out;
    out << "n,parity,v_pos,v_neg,vertex_delta_abs,e_pos,e_neg,edge_delta_abs,spc,"
           "published_v_pos,published_v_neg,published_e_pos,published_e_neg,published_match,flagged\n";
    for (const auto& row : rows) {
        const auto& r = row.report;
        out << row.n << ',' << (row.n_even ? "even" : "odd") << ',' << r.v_pos << ',' << r.v_neg << ','
            << row.vertex_delta_abs << ',' << r.e_pos << ',' << r.e_neg << ',' << row.edge_delta_abs << ','
            << (r.is_spc ? "true" : "false") << ',';
        if (const ExpectedCounts* claim = published_claim(row)) {
            const auto match = compare(*claim, r);
            out << format_count(claim->v_pos) << ',' << format_count(claim->v_neg) << ','
                << format_count(claim->e_pos) << ',' << format_count(claim->e_neg) << ',' << to_string(match);
        } else {
            out << "-,-,-,-,-";
        }
        out << ',' << (row.flagged ? "true" : "false") << '\n';
    }
    return out.str();
}

std::string render_report_text(const CordialityReport& r) {
    std::vector<std::vector<std::string>> grid{
        {"v_α(1)", "v_α(-1)", "v_α(-1)-v_α(1)", "e_α*(1)", "e_α*(-1)", "e_α*(-1)-e_α*(1)", "verdict"},
        {std::to_string(r.v_pos), std::to_string(r.v_neg), std::to_string(r.vertex_delta), std::to_string(r.e_pos),
         std::to_string(r.e_neg), std::to_string(r.edge_delta), r.is_spc ? "SPC" : "not SPC"},
    };
    std::ostringstream out;
    render_grid(out, grid);
    out << summary(r) << "\n";
    return out.str();
}

} // namespace spc
