#include "spc/cli.hpp"

#include <algorithm>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "spc/errors.hpp"
#include "spc/families.hpp"
#include "spc/io.hpp"
#include "spc/schemes.hpp"
#include "spc/search.hpp"
#include "spc/table.hpp"

namespace spc::cli {

namespace {

struct BuildArgs {
    std::string spec;
    std::string out;
};

struct SchemeArgs {
    std::string name;
    std::optional<std::size_t> n;
    std::optional<std::size_t> k;
    std::string variant = "literal";
    std::string graph_out;
    std::string labeling_out;
    bool json = false;
};

struct VerifyArgs {
    std::string graph;
    std::string labeling;
    bool json = false;
};

struct SearchArgs {
    std::string graph;
    std::string family;
    bool exists = false;
    bool count = false;
    bool collect = false;
    bool fix = false;
    bool no_fix = false;
    bool no_prune = false;
    std::size_t max_vertices = 28;
    unsigned threads = 1;
    std::string witness_out;
    bool json = false;
};

struct TableArgs {
    std::string scheme;
    std::string range;
    std::string variant = "literal";
    std::string csv_out;
    std::string format = "text";
};

struct ExportArgs {
    std::string graph;
    std::string labeling;
    std::string out;
};

int cmd_build(const BuildArgs& a, std::ostream& out, std::ostream& err) {
    const Graph g = build(parse_family_spec(a.spec));
    const std::string text = io::dump(io::graph_to_json(g));
    if (a.out.empty()) {
        out << text;
        err << "vertices: " << g.num_vertices() << ", edges: " << g.num_edges() << "\n";
    } else {
        io::write_file(a.out, text);
        out << "vertices: " << g.num_vertices() << ", edges: " << g.num_edges() << "\n";
    }
    return kExitOk;
}

std::size_t require_param(const std::optional<std::size_t>& v, std::string_view flag, std::string_view scheme) {
    if (!v) throw BadParameter("scheme " + std::string(scheme) + " needs " + std::string(flag));
    return *v;
}

int cmd_scheme(const SchemeArgs& a, std::ostream& out) {
    SchemeId id;
    id.kind = parse_scheme_kind(a.name);
    switch (id.kind) {
    case SchemeKind::SpltgBull: break;
    case SchemeKind::HelmDumbbell:
        id.param = require_param(a.k, "--k", a.name);
        id.variant = parse_helm_variant(a.variant);
        break;
    default: id.param = require_param(a.n, "--n", a.name); break;
    }
    const SchemeOutput s = run_scheme(id);
    if (!a.graph_out.empty()) io::write_file(a.graph_out, io::dump(io::graph_to_json(s.graph)));
    if (!a.labeling_out.empty()) io::write_file(a.labeling_out, io::dump(io::labeling_to_json(s.labeling)));

    if (a.json) {
        out << io::dump(io::report_to_json(s.report));
    } else {
        out << scheme_name(id.kind);
        if (id.kind != SchemeKind::SpltgBull) out << (id.kind == SchemeKind::HelmDumbbell ? " k=" : " n=") << id.param;
        if (id.kind == SchemeKind::HelmDumbbell) out << " variant=" << variant_name(id.variant);
        out << ": " << s.graph.num_vertices() << " vertices, " << s.graph.num_edges() << " edges\n";
        out << render_report_text(s.report);
        for (const auto& claim : s.expected) {
            out << claim.provenance << ": " << to_string(compare(claim, s.report))
                << (consistent(claim, s.report) ? "" : " (contradicted by computed counts)") << "\n";
        }
    }
    return s.report.is_spc ? kExitOk : kExitNegative;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    const Graph g = io::load_graph(a.graph);
    const SignedLabeling l = io::load_labeling(a.labeling);
    const CordialityReport r = evaluate(g, l);
    out << (a.json ? io::dump(io::report_to_json(r)) : render_report_text(r));
    return r.is_spc ? kExitOk : kExitNegative;
}

int cmd_search(const SearchArgs& a, std::ostream& out) {
    if (a.graph.empty() == a.family.empty()) throw BadParameter("search needs exactly one of GRAPH or --family");
    const Graph g = a.family.empty() ? io::load_graph(a.graph) : build(parse_family_spec(a.family));

    SearchOptions opts;
    opts.mode = a.collect ? SearchMode::Collect : a.count ? SearchMode::Count : SearchMode::Exists;
    if (a.fix) opts.fix_first_vertex = true;
    if (a.no_fix) opts.fix_first_vertex = false;
    opts.prune = !a.no_prune;
    opts.max_vertices = a.max_vertices;
    opts.threads = std::max(1U, a.threads);
    const SearchResult r = search_spc(g, opts);

    if (!a.witness_out.empty() && r.witness) io::write_file(a.witness_out, io::dump(io::labeling_to_json(*r.witness)));
    if (a.json) {
        out << io::dump(io::search_result_to_json(r));
    } else {
        out << "exists: " << (r.exists ? "true" : "false") << "\n";
        if (r.count) out << "count: " << *r.count << "\n";
        out << "nodes explored: " << r.nodes_explored << " (symmetry factor " << r.symmetry_factor << ")\n";
        if (r.witness) {
            out << "witness:";
            for (int s : r.witness->to_ints()) out << ' ' << (s > 0 ? "+1" : "-1");
            out << "\n" << summary(evaluate(g, *r.witness)) << "\n";
        }
        for (const auto& l : r.collected) {
            for (int s : l.to_ints()) out << (s > 0 ? '+' : '-');
            out << "\n";
        }
        if (r.collection_truncated) out << "(collection truncated)\n";
    }
    return r.exists ? kExitOk : kExitNegative;
}

int cmd_table(const TableArgs& a, std::ostream& out) {
    const SchemeKind kind = parse_scheme_kind(a.scheme);
    const auto rows = make_table(kind, parse_range(a.range), parse_helm_variant(a.variant));
    if (!a.csv_out.empty()) io::write_file(a.csv_out, render_table_csv(rows));
    if (a.format == "csv") {
        out << render_table_csv(rows);
    } else if (a.format == "text") {
        out << render_table_text(rows);
    } else {
        throw BadParameter("unknown table format '" + a.format + "' (expected text or csv)");
    }
    const bool balanced = std::all_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.report.is_spc; });
    return balanced ? kExitOk : kExitNegative;
}

int cmd_export(const ExportArgs& a, std::ostream& out) {
    const Graph g = io::load_graph(a.graph);
    std::optional<SignedLabeling> l;
    if (!a.labeling.empty()) l = io::load_labeling(a.labeling);
    const std::string dot = io::to_dot(g, l ? &*l : nullptr);
    if (a.out.empty()) {
        out << dot;
    } else {
        io::write_file(a.out, dot);
    }
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Signed product cordial labelings: families, schemes, verification and exhaustive search", "spc"};
    app.require_subcommand(1, 1);

    BuildArgs build_args;
    auto* build_cmd = app.add_subcommand("build", "Build a family graph and write it as JSON");
    build_cmd->add_option("spec", build_args.spec, "Family spec, e.g. spltg(star:8), corona(cycle:4,3)")->required();
    build_cmd->add_option("-o,--out", build_args.out, "Output file (stdout when omitted)");

    SchemeArgs scheme_args;
    auto* scheme_cmd = app.add_subcommand("scheme", "Apply a labeling scheme and report the balance counts");
    scheme_cmd->add_option("name", scheme_args.name, "spltg-star | spltg-bull | psquare | corona-c-3k1 | helm-dumbbell")
        ->required();
    scheme_cmd->add_option("--n", scheme_args.n, "Family size");
    scheme_cmd->add_option("--k", scheme_args.k, "Path length (vertices) for helm-dumbbell");
    scheme_cmd->add_option("--variant", scheme_args.variant, "helm-dumbbell reading: literal | endpoints-positive");
    scheme_cmd->add_option("--graph-out", scheme_args.graph_out, "Write the graph JSON here");
    scheme_cmd->add_option("--labeling-out", scheme_args.labeling_out, "Write the labeling JSON here");
    scheme_cmd->add_flag("--json", scheme_args.json, "Print the report as JSON");

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "Evaluate a labeling against a graph");
    verify_cmd->add_option("graph", verify_args.graph, "Graph JSON file")->required();
    verify_cmd->add_option("labeling", verify_args.labeling, "Labeling JSON file")->required();
    verify_cmd->add_flag("--json", verify_args.json, "Print the report as JSON");

    SearchArgs search_args;
    auto* search_cmd = app.add_subcommand("search", "Exhaustively search for signed product cordial labelings");
    search_cmd->add_option("graph", search_args.graph, "Graph JSON file");
    search_cmd->add_option("--family", search_args.family, "Build the graph from a family spec instead");
    auto* exists_flag = search_cmd->add_flag("--exists", search_args.exists, "Stop at the first witness (default)");
    auto* count_flag = search_cmd->add_flag("--count", search_args.count, "Count every SPC labeling");
    auto* collect_flag = search_cmd->add_flag("--collect", search_args.collect, "Count and list every SPC labeling");
    exists_flag->excludes(count_flag)->excludes(collect_flag);
    count_flag->excludes(collect_flag);
    auto* fix_flag = search_cmd->add_flag("--fix-first", search_args.fix, "Pin vertex 0 to +1 and double counts");
    search_cmd->add_flag("--no-fix", search_args.no_fix, "Enumerate all labelings")->excludes(fix_flag);
    search_cmd->add_flag("--no-prune", search_args.no_prune, "Disable the balance-bound pruning");
    search_cmd->add_option("--max-vertices", search_args.max_vertices, "Refuse graphs larger than this");
    search_cmd->add_option("--threads", search_args.threads, "Worker threads");
    search_cmd->add_option("--witness-out", search_args.witness_out, "Write the witness labeling JSON here");
    search_cmd->add_flag("--json", search_args.json, "Print the result as JSON");

    TableArgs table_args;
    auto* table_cmd = app.add_subcommand("table", "Tabulate a scheme's counts over a parameter range");
    table_cmd->add_option("scheme", table_args.scheme, "spltg-star | psquare | corona-c-3k1 | helm-dumbbell")->required();
    table_cmd->add_option("--n", table_args.range, "Parameter range LO..HI")->required();
    table_cmd->add_option("--variant", table_args.variant, "helm-dumbbell reading");
    table_cmd->add_option("--csv", table_args.csv_out, "Also write CSV to this file");
    table_cmd->add_option("--format", table_args.format, "text | csv");

    ExportArgs export_args;
    auto* export_cmd = app.add_subcommand("export", "Render a graph (and optional labeling) as Graphviz DOT");
    export_cmd->add_option("graph", export_args.graph, "Graph JSON file")->required();
    export_cmd->add_option("--labeling", export_args.labeling, "Labeling JSON file");
    export_cmd->add_option("-o,--out", export_args.out, "Output file (stdout when omitted)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*build_cmd) return cmd_build(build_args, out, err);
        if (*scheme_cmd) return cmd_scheme(scheme_args, out);
        if (*verify_cmd) return cmd_verify(verify_args, out);
        if (*search_cmd) return cmd_search(search_args, out);
        if (*table_cmd) return cmd_table(table_args, out);
        if (*export_cmd) return cmd_export(export_args, out);
    } catch (const spc::Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace spc::cli
