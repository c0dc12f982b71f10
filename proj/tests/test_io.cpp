#include "doctest.h"
#include "snark/census.hpp"
#include "snark/graphs.hpp"
#include "snark/io.hpp"
#include "snark/isomorphism.hpp"

using namespace snark;

TEST_CASE("graph6 of known graphs") {
    const auto p = parse_graph6("IheA@GUAo");
    CHECK(p.vertices == 10);
    CHECK(p.edges.size() == 15);
    CHECK(isomorphic(to_cubic_graph(p), petersen()));
    CHECK(write_graph6(k4()) == "C~");
    CHECK(parse_graph6(">>graph6<<C~\n") == parse_graph6("C~"));
    CHECK(write_graph6(SimpleGraph{0, {}}) == "?");
    CHECK(parse_graph6("?").vertices == 0);
}

TEST_CASE("graph6 round trips") {
    for (const auto& g : bridgeless_cubic_census(10)) {
        const auto line = write_graph6(g);
        const auto back = parse_graph6(line);
        CHECK(write_graph6(back) == line);
        CHECK(isomorphic(to_cubic_graph(back), g));
    }
    // Long form of the vertex count.
    SimpleGraph big{100, {{0, 99}, {5, 70}}};
    const auto line = write_graph6(big);
    CHECK(line.substr(0, 4) == "~?@c");  // 100 = 1 * 64 + 36
    CHECK(parse_graph6(line) == SimpleGraph{100, {{5, 70}, {0, 99}}});
}

TEST_CASE("graph6 errors carry byte offsets") {
    auto offset_of = [](std::string_view s) -> std::size_t {
        try {
            parse_graph6(s);
        } catch (const ParseError& e) {
            return e.offset();
        }
        return 999;
    };
    CHECK(offset_of("IheA@G") == 6);
    CHECK(offset_of("Ihe A@GUAo") == 3);
    CHECK(offset_of("IheA@GUAoX") == 9);
    CHECK(offset_of("") == 0);
    CHECK(offset_of("A`") == 1);  // padding bit set
    CHECK_THROWS_AS(write_graph6(theta()), std::invalid_argument);
    CHECK_THROWS_AS(to_cubic_graph(SimpleGraph{3, {{0, 1}, {1, 2}}}), std::invalid_argument);
}

TEST_CASE("multipole documents round trip") {
    const auto dec = petersen_decollineator();
    const auto text = write_dipole(dec);
    CHECK(parse_dipole(text) == dec);
    CHECK(write_dipole(parse_dipole(text)) == text);
    CHECK(parse_multipole(write_multipole(petersen())) == petersen());
    const auto raw = remove_vertices(petersen(), std::vector<int>{0});
    CHECK(parse_multipole(write_multipole(raw)) == raw);

    auto plan = canonical_plan(theta());
    plan.edges[2].input_lift = {1, 0};
    const auto doc = write_plan(plan);
    const auto back = parse_plan(doc);
    CHECK(back.base == plan.base);
    CHECK(back.library == plan.library);
    CHECK(back.edges.size() == 3);
    CHECK(back.edges[2].input_lift == std::array<int, 2>{1, 0});
    CHECK(write_plan(back) == doc);
}

TEST_CASE("multipole document errors") {
    auto line_of = [](std::string_view s) -> std::size_t {
        try {
            parse_dipole(s);
        } catch (const ParseError& e) {
            return e.offset();
        }
        return 999;
    };
    const std::string mismatch = "multipole 2 5\ne v0 d:a\ne v0 d:b\ne v0 v1\ne v1 d:c\ne v1 d:d\ninput a b\noutput c\nend\n";
    CHECK(line_of(mismatch) == 1);
    const std::string duplicate = "multipole 2 5\ne v0 d:a\ne v0 d:a\ne v0 v1\ne v1 d:c\ne v1 d:d\ninput a a\noutput c d\nend\n";
    CHECK(line_of(duplicate) == 1);
    CHECK(line_of("# comment\nmultipole 2 1\ne v0 x1\n") == 3);
    CHECK(line_of("multipole 2 1\ne v0 v1\n") == 3);
    CHECK_THROWS_AS(parse_plan("plan 1\nbase\n"), ParseError);
}

TEST_CASE("loading by name") {
    CHECK(load_graph("petersen") == petersen());
    CHECK(load_dipole("superedge") == basic_superedge());
    CHECK(load_plan("k4").edges.size() == 6);
    CHECK_THROWS(load_graph("/nonexistent/file"));
}
