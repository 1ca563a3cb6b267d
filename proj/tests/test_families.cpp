#include "doctest.h"

#include <algorithm>

#include "catalog.hpp"
#include "oracle.hpp"
#include "spc/errors.hpp"
#include "spc/families.hpp"

using namespace spc;

namespace {

std::vector<std::size_t> degree_sequence(const Graph& g) {
    std::vector<std::size_t> d;
    for (VertexId v = 0; v < g.num_vertices(); ++v) d.push_back(degree(g, v));
    std::sort(d.begin(), d.end());
    return d;
}

oracle::Matrix matrix_of(const Graph& g) {
    oracle::Matrix m(g.num_vertices(), std::vector<int>(g.num_vertices(), 0));
    for (const auto& e : g.edges()) m[e.first][e.second] = m[e.second][e.first] = 1;
    return m;
}

} // namespace

TEST_CASE("star") {
    const Graph s8 = star(8);
    CHECK(s8.num_vertices() == 9);
    CHECK(s8.num_edges() == 8);
    CHECK(star(1) == make_graph(2, {{0, 1}}, RoleMap{{0, "v0"}, {1, "v1"}}));
    const Graph s3 = star(3);
    CHECK(degree(s3, 0) == 3);
    for (VertexId v = 1; v <= 3; ++v) CHECK(degree(s3, v) == 1);
    CHECK(s3.name(0) == "v0");
    CHECK_THROWS_AS(star(0), BadParameter);
}

TEST_CASE("bull") {
    const Graph b = bull();
    CHECK(b.num_vertices() == 5);
    CHECK(b.num_edges() == 5);
    CHECK(degree_sequence(b) == std::vector<std::size_t>{1, 1, 2, 3, 3});
    // Triangle on v2, v3, v4.
    CHECK(b.has_edge(1, 2));
    CHECK(b.has_edge(2, 3));
    CHECK(b.has_edge(1, 3));
    CHECK(b.name(0) == "v1");
    CHECK(b.name(4) == "v5");
}

TEST_CASE("path, cycle, wheel") {
    CHECK(wheel(4).num_vertices() == 5);
    CHECK(wheel(4).num_edges() == 8);
    CHECK(wheel(4).name(0) == "hub");
    CHECK(cycle(3).num_edges() == 3);
    CHECK(degree_sequence(cycle(3)) == std::vector<std::size_t>{2, 2, 2});
    CHECK(path(2).num_edges() == 1);
    CHECK(path(1).num_edges() == 0);
    CHECK_THROWS_AS(path(0), BadParameter);
    CHECK_THROWS_AS(cycle(2), BadParameter);
    CHECK_THROWS_AS(wheel(2), BadParameter);
}

TEST_CASE("helm") {
    const Graph h4 = helm(4);
    CHECK(h4.num_vertices() == 9);
    CHECK(h4.num_edges() == 12);
    CHECK(degree(h4, 0) == 4);
    for (VertexId v = 1; v <= 4; ++v) CHECK(degree(h4, v) == 4);
    for (VertexId v = 5; v <= 8; ++v) CHECK(degree(h4, v) == 1);
    CHECK(h4.name(5) == "v'1");
    CHECK(h4.has_edge(1, 5));
    const Graph h3 = helm(3);
    CHECK(h3.num_vertices() == 7);
    CHECK(h3.num_edges() == 9);
    CHECK_THROWS_AS(helm(2), BadParameter);
}

TEST_CASE("path_square") {
    CHECK(path_square(8).num_vertices() == 8);
    CHECK(path_square(8).num_edges() == 13);
    CHECK(path_square(3).num_edges() == 3);
    CHECK(degree_sequence(path_square(4)) == std::vector<std::size_t>{2, 2, 3, 3});
    CHECK_THROWS_AS(path_square(2), BadParameter);
    for (std::size_t n = 3; n <= 40; ++n) {
        CAPTURE(n);
        const Graph g = path_square(n);
        CHECK(g.num_edges() == 2 * n - 3);
        CHECK(matrix_of(g) == oracle::path_square(n));
    }
}

TEST_CASE("splitting_graph") {
    const Graph s = splitting_graph(star(8));
    CHECK(s.num_vertices() == 18);
    CHECK(s.num_edges() == 24);
    CHECK(s.name(9) == "v'0");
    CHECK(s.name(17) == "v'8");

    const Graph sb = splitting_graph(bull());
    CHECK(sb.num_vertices() == 10);
    CHECK(sb.num_edges() == 15);
    CHECK(sb.name(5) == "v'1");

    // v'0 - v1 - v0 - v'1
    const Graph sk2 = splitting_graph(path(2));
    CHECK(sk2.num_vertices() == 4);
    CHECK(sk2.num_edges() == 3);
    CHECK(sk2.has_edge(2, 1));
    CHECK(sk2.has_edge(1, 0));
    CHECK(sk2.has_edge(0, 3));
    CHECK_FALSE(sk2.has_edge(0, 2));

    // A vertex and its duplicate are never adjacent.
    for (VertexId v = 0; v < 9; ++v) CHECK_FALSE(s.has_edge(v, 9 + v));
}

TEST_CASE("splitting_graph matches the neighbourhood definition on every family") {
    for (const auto& [spec, g] : catalog::graphs_up_to(40)) {
        CAPTURE(spec);
        const Graph s = splitting_graph(g);
        CHECK(s.num_vertices() == 2 * g.num_vertices());
        CHECK(s.num_edges() == 3 * g.num_edges());
        CHECK(matrix_of(s) == oracle::splitting(matrix_of(g)));
        for (VertexId v = 0; v < g.num_vertices(); ++v) {
            CHECK(degree(s, v) == 2 * degree(g, v));
            CHECK(degree(s, g.num_vertices() + v) == degree(g, v));
        }
    }
}

TEST_CASE("primed role names") {
    CHECK(primed("v3") == "v'3");
    CHECK(primed("v'1") == "v''1");
    CHECK(primed("hub") == "hub'");
    CHECK(primed("7") == "'7");
}

TEST_CASE("corona_empty") {
    const Graph c = corona_empty(cycle(4), 3);
    CHECK(c.num_vertices() == 16);
    CHECK(c.num_edges() == 16);
    CHECK(c.name(0) == "u1");
    CHECK(c.name(4) == "v1");
    CHECK(c.name(8) == "w1");
    CHECK(c.name(15) == "t4");

    const Graph p4 = corona_empty(path(2), 1);
    CHECK(p4.num_vertices() == 4);
    CHECK(p4.num_edges() == 3);
    CHECK(degree_sequence(p4) == std::vector<std::size_t>{1, 1, 2, 2});

    for (std::size_t n = 3; n <= 30; ++n) CHECK(corona_empty(cycle(n), 3).num_vertices() == 4 * n);
    CHECK_THROWS_AS(corona_empty(cycle(3), 0), BadParameter);

    const Graph many = corona_empty(path(3), 5);
    CHECK(many.num_vertices() == 18);
    CHECK(validate(many).empty());
}

TEST_CASE("corona cardinalities on every family") {
    for (const auto& [spec, g] : catalog::graphs_up_to(30)) {
        for (std::size_t m = 1; m <= 4; ++m) {
            CAPTURE(spec);
            CAPTURE(m);
            const Graph c = corona_empty(g, m);
            CHECK(c.num_vertices() == g.num_vertices() * (1 + m));
            CHECK(c.num_edges() == g.num_edges() + m * g.num_vertices());
        }
    }
}

TEST_CASE("helm_dumbbell") {
    const Graph d5 = helm_dumbbell(5);
    CHECK(d5.num_vertices() == 21);
    CHECK(d5.num_edges() == 28);
    CHECK(d5.name(0) == "v0");
    CHECK(d5.name(9) == "w0");
    CHECK(d5.name(18) == "u2");
    CHECK(d5.name(20) == "u4");
    CHECK(d5.has_edge(0, 18));
    CHECK(d5.has_edge(20, 9));
    CHECK(degree(d5, 0) == 5);

    const Graph d2 = helm_dumbbell(2);
    CHECK(d2.num_vertices() == 18);
    CHECK(d2.num_edges() == 25);
    CHECK(d2.has_edge(0, 9));

    CHECK(helm_dumbbell(3).num_vertices() == 19);
    CHECK(helm_dumbbell(3).num_edges() == 26);
    for (std::size_t k = 2; k <= 30; ++k) {
        CHECK(helm_dumbbell(k).num_vertices() == k + 16);
        CHECK(helm_dumbbell(k).num_edges() == k + 23);
    }
    CHECK_THROWS_AS(helm_dumbbell(1), BadParameter);
}

TEST_CASE("every constructor output validates and obeys the handshake law") {
    for (const auto& [spec, g] : catalog::graphs_up_to(1000)) {
        CAPTURE(spec);
        CHECK(validate(g).empty());
        std::size_t total = 0;
        for (VertexId v = 0; v < g.num_vertices(); ++v) total += degree(g, v);
        CHECK(total == 2 * g.num_edges());
        CHECK(g.roles().size() == g.num_vertices());
    }
}

TEST_CASE("family spec text form") {
    CHECK(build(parse_family_spec("spltg(star:8)")).num_vertices() == 18);
    CHECK(build(parse_family_spec("corona(cycle:4,3)")).num_vertices() == 16);
    CHECK(build(parse_family_spec("helmdumbbell:5")).num_vertices() == 21);
    CHECK(build(parse_family_spec(" spltg( bull ) ")).num_edges() == 15);
    CHECK(parse_family_spec("corona(cycle:4,3)") == FamilySpec::corona_of(FamilySpec::sized(FamilyKind::Cycle, 4), 3));

    for (const auto& text : catalog::all_specs()) CHECK(to_string(parse_family_spec(text)) == text);

    CHECK_THROWS_AS(parse_family_spec("star"), ParseError);
    CHECK_THROWS_AS(parse_family_spec("star:x"), ParseError);
    CHECK_THROWS_AS(parse_family_spec("spltg(star:3"), ParseError);
    CHECK_THROWS_AS(parse_family_spec("blob:3"), ParseError);
    CHECK_THROWS_AS(parse_family_spec("star:3 extra"), ParseError);
    CHECK_THROWS_AS(parse_family_spec("star:-1"), ParseError);
    CHECK_THROWS_AS(build(parse_family_spec("star:0")), BadParameter);
    CHECK_THROWS_AS(build(parse_family_spec("corona(cycle:3,0)")), BadParameter);
}

TEST_CASE("splitting graph role names stay unique when primes already exist") {
    const Graph sh = splitting_graph(helm(4));
    CHECK(validate(sh).empty());
    CHECK(sh.name(9) == "v0'");
    CHECK(sh.name(14) == "v'1'");

    const Graph twice = splitting_graph(splitting_graph(path(2)));
    CHECK(twice.name(2) == "v'1");
    CHECK(twice.name(4) == "v1'");
    CHECK(twice.name(6) == "v'1'");
}
