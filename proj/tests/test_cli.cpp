#include "doctest.h"

#include <filesystem>
#include <sstream>

#include <unistd.h>

#include "spc/cli.hpp"
#include "spc/io.hpp"
#include "spc/schemes.hpp"

using namespace spc;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / ("spc_cli_test_" + std::to_string(::getpid()))) {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
};

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("build") {
    TempDir tmp;
    Run r = run({"build", "spltg(star:8)", "-o", tmp / "g.json"});
    CHECK(r.code == 0);
    CHECK(r.out == "vertices: 18, edges: 24\n");
    const Graph g = io::load_graph(tmp / "g.json");
    CHECK(g.num_vertices() == 18);
    CHECK(g.num_edges() == 24);

    r = run({"build", "bull"});
    CHECK(r.code == 0);
    CHECK(io::graph_from_json(io::parse_json(r.out)).num_edges() == 5);
    CHECK(r.err == "vertices: 5, edges: 5\n");

    r = run({"build", "helmdumbbell:5", "-o", tmp / "h.json"});
    CHECK(r.out == "vertices: 21, edges: 28\n");

    CHECK(run({"build", "star:"}).code == 2);
    CHECK(run({"build", "star:0"}).code == 2);
}

TEST_CASE("scheme") {
    Run r = run({"scheme", "spltg-star", "--n", "8"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "v 9/9, e 12/12, SPC"));

    r = run({"scheme", "spltg-bull"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "v 5/5, e 8/7, SPC"));

    r = run({"scheme", "helm-dumbbell", "--k", "5", "--variant", "literal"});
    CHECK(r.code == 1);
    CHECK(contains(r.out, "not SPC"));

    r = run({"scheme", "corona-c-3k1", "--n", "4"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "published proof: MISMATCH"));

    r = run({"scheme", "psquare", "--n", "8", "--json"});
    CHECK(r.out == io::dump(io::report_to_json(path_square_scheme(8).report)));

    CHECK(run({"scheme", "helm-dumbbell", "--k", "5", "--variant", "sketch"}).code == 2);
    CHECK(run({"scheme", "spltg-star"}).code == 2);
    CHECK(run({"scheme", "psquare", "--n", "2"}).code == 2);
    CHECK(run({"scheme", "nonsense", "--n", "2"}).code == 2);
}

TEST_CASE("verify") {
    TempDir tmp;
    io::write_file(tmp / "k2.json", R"({"vertices":2,"edges":[[0,1]]})");
    io::write_file(tmp / "pm.json", R"({"signs":[1,-1]})");
    io::write_file(tmp / "c3.json", R"({"vertices":3,"edges":[[0,1],[1,2],[0,2]]})");
    io::write_file(tmp / "ppp.json", R"({"signs":[1,1,1]})");

    CHECK(run({"verify", tmp / "k2.json", tmp / "pm.json"}).code == 0);
    const Run bad = run({"verify", tmp / "c3.json", tmp / "ppp.json"});
    CHECK(bad.code == 1);
    CHECK(contains(bad.out, "not SPC"));
    CHECK(run({"verify", tmp / "c3.json", tmp / "pm.json"}).code == 2);
    CHECK(run({"verify", tmp / "missing.json", tmp / "pm.json"}).code == 2);

    REQUIRE(run({"scheme", "spltg-star", "--n", "8", "--graph-out", tmp / "star8.json", "--labeling-out",
                 tmp / "star8-labels.json"})
                .code == 0);
    const Run star8 = run({"verify", tmp / "star8.json", tmp / "star8-labels.json", "--json"});
    CHECK(star8.code == 0);
    CHECK(star8.out == io::dump(io::report_to_json(spltg_star_scheme(8).report)));
}

TEST_CASE("search") {
    TempDir tmp;
    REQUIRE(run({"build", "path:3", "-o", tmp / "p3.json"}).code == 0);
    Run r = run({"search", tmp / "p3.json", "--count"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "count: 4\n"));

    r = run({"search", "--family", "path:2", "--count"});
    CHECK(contains(r.out, "count: 2\n"));

    r = run({"search", "--family", "helmdumbbell:5", "--exists", "--witness-out", tmp / "w.json"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "exists: true"));
    REQUIRE(run({"build", "helmdumbbell:5", "-o", tmp / "h5.json"}).code == 0);
    CHECK(run({"verify", tmp / "h5.json", tmp / "w.json"}).code == 0);

    r = run({"search", "--family", "cycle:6", "--count", "--json"});
    CHECK(r.code == 1);
    CHECK(contains(r.out, "\"count\": 0"));

    r = run({"search", "--family", "cycle:5", "--collect", "--no-fix"});
    CHECK(r.code == 0);

    CHECK(run({"search", "--family", "helmdumbbell:13"}).code == 2);
    CHECK(run({"search", "--family", "path:5", "--max-vertices", "4"}).code == 2);
    CHECK(run({"search"}).code == 2);
    CHECK(run({"search", "--family", "path:3", "--count", "--collect"}).code == 2);
}

TEST_CASE("table") {
    TempDir tmp;
    Run r = run({"table", "spltg-star", "--n", "1..10", "--csv", tmp / "t.csv"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "v_α(1)"));
    CHECK(contains(io::read_file(tmp / "t.csv"), "7,odd,8,8,0,10,11,1,true"));

    r = run({"table", "psquare", "--n", "3..10", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "10,even,5,5,0,8,9,1,true"));

    r = run({"table", "corona-c-3k1", "--n", "3..6"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "flagged rows:"));

    CHECK(run({"table", "helm-dumbbell", "--n", "2..4"}).code == 1);
    CHECK(run({"table", "spltg-bull", "--n", "1..2"}).code == 2);
    CHECK(run({"table", "psquare", "--n", "9..3"}).code == 2);
    CHECK(run({"table", "psquare", "--n", "3..4", "--format", "xml"}).code == 2);
}

TEST_CASE("export") {
    TempDir tmp;
    REQUIRE(run({"build", "bull", "-o", tmp / "bull.json"}).code == 0);
    Run r = run({"export", tmp / "bull.json"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "graph G {"));
    CHECK(r.out == io::to_dot(io::load_graph(tmp / "bull.json")));

    REQUIRE(run({"scheme", "psquare", "--n", "8", "--graph-out", tmp / "sq.json", "--labeling-out", tmp / "sq-l.json"})
                .code == 0);
    REQUIRE(run({"export", tmp / "sq.json", "--labeling", tmp / "sq-l.json", "-o", tmp / "sq.dot"}).code == 0);
    const std::string dot = io::read_file(tmp / "sq.dot");
    CHECK(contains(dot, "style=dashed"));

    CHECK(run({"export", tmp / "missing.json"}).code == 2);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}
