#include <doctest.h>

#include <sstream>

#include "eip/rng.hpp"
#include "eip/textio.hpp"

using namespace eip;

TEST_CASE("system text format round trip") {
    CHECK(format_system(IntervalSystem(5, {{2, 5}})) == "5:2-5");
    CHECK(format_system(IntervalSystem(3)) == "3:");
    CHECK(parse_system("5:2-5") == IntervalSystem(5, {{2, 5}}));
    CHECK(parse_system("3:") == IntervalSystem(3));

    for (const std::string text : {"4:1-2,2-4", "1:", "7:1-7,2-3,5-6"})
        CHECK(format_system(parse_system(text)) == text);

    CHECK_THROWS_AS(parse_system("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_system("3:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_system("3:2-2"), std::domain_error);
}

TEST_CASE("hypergraph text format round trip") {
    const IntervalHypergraph h(3, {{1, 3}, {1, 2, 3}});
    CHECK(format_hypergraph(h) == "3:{1,3},{1,2,3}");
    CHECK(parse_hypergraph("3:{1,3},{1,2,3}") == h);
    for (const std::string text : {"3:{1,3},{1,2,3}", "4:", "5:{2,3},{2,3,4}"})
        CHECK(format_hypergraph(parse_hypergraph(text)) == text);
    CHECK_THROWS_AS(parse_hypergraph("3:{1,3"), std::invalid_argument);
}

TEST_CASE("format_double round trips exactly") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(0.0) == "0");
    SeededRng rng(5);
    for (int t = 0; t < 1000; ++t) {
        const double x = rng.uniform01();
        CHECK(std::stod(format_double(x)) == x);
    }
}

TEST_CASE("limitset serialization round trip") {
    const LimitSet k({{0.125, 0.875}, {0.1, 0.9000000000000001}});
    std::stringstream buf;
    write_limitset(buf, k);
    CHECK(buf.str().rfind("limitset v1 n_points=2", 0) == 0);
    CHECK(read_limitset(buf) == k);

    std::stringstream empty;
    write_limitset(empty, LimitSet());
    CHECK(read_limitset(empty) == LimitSet());

    std::stringstream bad("limitset v2 n_points=0\n");
    CHECK_THROWS_AS(read_limitset(bad), std::invalid_argument);
}

TEST_CASE("svg rendering") {
    const std::string svg = render_limitset_svg(spine_limit(4));
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("<circle") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(render_limitset_svg(LimitSet()).find("<circle") == std::string::npos);
}
