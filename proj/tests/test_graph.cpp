#include "rankforge/graph.hpp"

#include <random>

#include "rankforge/errors.hpp"

#include "doctest.h"
#include "oracles.hpp"

using namespace rankforge;

TEST_CASE("link list: single record") {
    const DirectedGraph g = parse_link_list("3.   5,", 175);
    CHECK(g.n() == 175);
    REQUIRE(g.out_degree(3) == 1);
    CHECK(g.out_links(3)[0] == 5);
    CHECK(g.link_count() == 1);
}

TEST_CASE("link list: empty target list marks a dangling node") {
    const DirectedGraph g = parse_link_list("33.    ,", 175);
    CHECK(g.out_degree(33) == 0);
    const auto dangling = g.dangling_nodes();
    CHECK(dangling.size() == 175); // every node, none has links
}

TEST_CASE("link list: empty stream") {
    const DirectedGraph g = parse_link_list("", 2);
    CHECK(g.n() == 2);
    CHECK(g.link_count() == 0);
}

TEST_CASE("link list: whitespace and line breaks are insignificant") {
    const DirectedGraph a = parse_link_list("1. 2 3,\n2. 1,", 3);
    const DirectedGraph b = parse_link_list("  1.\n2\n\t3 , 2.\t1 ,\n", 3);
    CHECK(a.same_graph(b));
}

TEST_CASE("link list: malformed records carry the line number") {
    CHECK_THROWS_AS(parse_link_list("3 5,", 10), ParseError);
    try {
        parse_link_list("1. 2,\n2 3,", 10);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_link_list("3. 5", 10), ParseError);   // missing comma
    CHECK_THROWS_AS(parse_link_list("3. x,", 10), ParseError);  // junk token
}

TEST_CASE("link list: out-of-range indices identify the record") {
    CHECK_THROWS_WITH_AS(parse_link_list("3. 200,", 175), doctest::Contains("200"),
                         RangeError);
    CHECK_THROWS_AS(parse_link_list("200. 3,", 175), RangeError);
}

TEST_CASE("link list: duplicate targets collapse, repeated sources merge") {
    const DirectedGraph g = parse_link_list("1. 2 2 2,\n1. 3 2,", 3);
    REQUIRE(g.out_degree(1) == 2);
    CHECK(g.out_links(1)[0] == 2);
    CHECK(g.out_links(1)[1] == 3);
}

TEST_CASE("link list: self-loops are kept") {
    const DirectedGraph g = parse_link_list("1. 1,", 2);
    CHECK(g.has_link(1, 1));
}

TEST_CASE("node list: basic records") {
    const auto labels = parse_node_list("1 Principals, 2 Consultants,");
    REQUIRE(labels.size() == 2);
    CHECK(labels[0] == "Principals");
    CHECK(labels[1] == "Consultants");
    CHECK(parse_node_list("1 X,") == std::vector<std::string>{"X"});
}

TEST_CASE("node list: interior whitespace collapses") {
    const auto labels = parse_node_list("1   Multi \t  Word Name  ,");
    CHECK(labels[0] == "Multi Word Name");
}

TEST_CASE("node list: indices must ascend from 1 without gaps") {
    CHECK_THROWS_AS(parse_node_list("2 A,"), ParseError);
    CHECK_THROWS_AS(parse_node_list("1 A, 3 B,"), ParseError);
    CHECK_THROWS_AS(parse_node_list("1 A, 1 B,"), ParseError);
    CHECK_THROWS_AS(parse_node_list("1 ,"), ParseError);
    CHECK_THROWS_AS(parse_node_list("1 A"), ParseError); // missing comma
}

TEST_CASE("text round trip: parse, serialize, re-parse is identity") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 25; ++trial) {
        const DirectedGraph g = oracle::random_graph(rng, 1 + trial % 17);
        const DirectedGraph back = parse_link_list(serialize_link_list(g), g.n());
        CHECK(back.same_graph(g));
        CHECK(parse_node_list(serialize_node_list(g)) == g.labels());
    }
}

TEST_CASE("json round trip and validation") {
    std::mt19937 rng(43);
    const DirectedGraph g = oracle::random_graph(rng, 12);
    const DirectedGraph back = graph_from_json(graph_to_json(g));
    CHECK(back.same_graph(g));

    CHECK_THROWS_AS(graph_from_json("{"), ParseError);
    CHECK_THROWS_AS(graph_from_json("[]"), ParseError);
    CHECK_THROWS_AS(graph_from_json(R"({"n": 2, "labels": ["a"]})"), ParseError);
    CHECK_THROWS_AS(graph_from_json(R"({"n": 2, "links": [[1, 5]]})"), RangeError);
    CHECK(graph_from_json(R"({"n": 2})").n() == 2); // labels default to indices
}

TEST_CASE("degree distribution: two-node chain") {
    const DirectedGraph g = parse_link_list("1. 2,", 2);
    const auto out = degree_distribution(g, Direction::Out);
    CHECK(out.counts == std::map<int, int>{{0, 1}, {1, 1}});
    const auto in = degree_distribution(g, Direction::In);
    CHECK(in.counts == std::map<int, int>{{0, 1}, {1, 1}});
}

TEST_CASE("degree distribution: link-count conservation") {
    std::mt19937 rng(44);
    for (int trial = 0; trial < 20; ++trial) {
        const DirectedGraph g = oracle::random_graph(rng, 2 + trial * 3);
        long long in_total = 0, out_total = 0;
        for (const auto& [d, c] : degree_distribution(g, Direction::In).counts)
            in_total += static_cast<long long>(d) * c;
        for (const auto& [d, c] : degree_distribution(g, Direction::Out).counts)
            out_total += static_cast<long long>(d) * c;
        CHECK(in_total == out_total);
        CHECK(out_total == static_cast<long long>(g.link_count()));
    }
}

TEST_CASE("power-law fit: exact power law is recovered to 1e-9") {
    // 1000 * d^-3 sampled where it is integral
    DegreeDistribution dist;
    dist.counts = {{1, 1000}, {2, 125}, {10, 1}};
    CHECK(fit_powerlaw(dist) == doctest::Approx(3.0).epsilon(1e-12));

    // real-valued samples of the same law at d in {1,2,4,8}
    const std::vector<std::pair<double, double>> pts{
        {1, 1000.0}, {2, 125.0}, {4, 15.625}, {8, 1.953125}};
    CHECK(fit_powerlaw_points(pts) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("power-law fit: flat distribution gives exponent 0") {
    DegreeDistribution dist;
    dist.counts = {{1, 5}, {2, 5}, {3, 5}};
    CHECK(fit_powerlaw(dist) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("power-law fit: needs three support points with d >= 1") {
    DegreeDistribution dist;
    dist.counts = {{0, 10}, {1, 5}, {2, 5}};
    CHECK_THROWS_AS(fit_powerlaw(dist), InsufficientDataError);
}

TEST_CASE("reverse: single edge and involution") {
    const DirectedGraph g = parse_link_list("1. 2,", 2);
    const DirectedGraph r = reverse(g);
    CHECK(r.has_link(2, 1));
    CHECK_FALSE(r.has_link(1, 2));

    std::mt19937 rng(45);
    for (int trial = 0; trial < 15; ++trial) {
        const DirectedGraph h = oracle::random_graph(rng, 3 + trial * 4);
        CHECK(reverse(reverse(h)).same_graph(h));
    }
}

TEST_CASE("graph constructor validation") {
    CHECK_THROWS_AS(DirectedGraph(2, {{1}, {3}}), RangeError);
    CHECK_THROWS_AS(DirectedGraph(1, {{1}, {1}}), DimensionError);
    const DirectedGraph g(3, {{2, 2, 3}});
    CHECK(g.out_degree(1) == 2); // duplicates collapsed
    CHECK_THROWS_AS(g.label(0), RangeError);
    CHECK_THROWS_AS(g.label(4), RangeError);
}
