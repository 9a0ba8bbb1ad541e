#include <variant>

#include "doctest.h"
#include "fixtures.hpp"
#include "gprod/io.hpp"

using namespace gprod;

TEST_CASE("graph json round trip") {
    Graph g(4, {{0, 1}, {1, 3}, {0, 2}});
    std::string doc = serialize_graph(g);
    CHECK(parse_graph(doc) == g);
    CHECK(serialize_graph(parse_graph(doc)) == doc);

    // The loops key appears exactly when the graph allows loops.
    CHECK(doc.find("loops") == std::string::npos);
    Graph with_loop(2, {{0, 0}}, true);
    std::string loop_doc = serialize_graph(with_loop);
    CHECK(loop_doc.find("\"loops\": true") != std::string::npos);
    CHECK(parse_graph(loop_doc) == with_loop);
}

TEST_CASE("graph json rejects malformed documents") {
    CHECK_THROWS_AS(parse_graph("{\"order\": 2}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph("{\"edges\": [], \"order\": 2, \"extra\": 1}"),
                    std::invalid_argument);
    CHECK(parse_graph("{\"edges\": [[1, 0]], \"order\": 2}") == Graph::complete(2));
    CHECK_THROWS_AS(parse_graph("{\"edges\": [\"0-1\"], \"order\": 2}"),
                    std::invalid_argument);  // edges are pairs, not strings
    CHECK_THROWS_AS(parse_graph("{\"edges\": [[0, 1, 2]], \"order\": 3}"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_graph("{\"edges\": [[0, 5]], \"order\": 2}"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_graph("{\"edges\": [[0, 0]], \"order\": 2}"),
                    std::invalid_argument);  // loop without the flag
    CHECK_THROWS_AS(parse_graph("not json"), std::invalid_argument);
}

TEST_CASE("instance json round trips") {
    AnyInstance flat = fx::four_c3();
    std::string doc = serialize_instance(flat);
    AnyInstance back = parse_instance(doc);
    REQUIRE(std::holds_alternative<OtimesInstance>(back));
    CHECK(std::get<OtimesInstance>(back) == fx::four_c3());
    CHECK(serialize_instance(back) == doc);

    AnyInstance fiber = fx::c3_circ();
    std::string cdoc = serialize_instance(fiber);
    AnyInstance cback = parse_instance(cdoc);
    REQUIRE(std::holds_alternative<CircInstance>(cback));
    CHECK(std::get<CircInstance>(cback) == fx::c3_circ());
    CHECK(serialize_instance(cback) == cdoc);

    CHECK(serialize_otimes(fx::four_c3()) == doc);
    CHECK(serialize_circ(fx::c3_circ()) == cdoc);
}

TEST_CASE("instance json validation") {
    std::string doc = serialize_otimes(fx::two_c6());
    // Unknown kind.
    std::string bad_kind = doc;
    bad_kind.replace(bad_kind.find("\"otimes\""), 8, "\"tensor\"");
    CHECK_THROWS_AS(parse_instance(bad_kind), std::invalid_argument);

    CHECK_THROWS_AS(parse_instance("{\"kind\": \"otimes\"}"), std::invalid_argument);
    CHECK_THROWS_AS(parse_instance("[]"), std::invalid_argument);

    // A circ assignment must cover every base vertex.
    std::string short_assign =
        "{\"assignment\": {\"0\": 0, \"1\": 0},"
        " \"base\": {\"edges\": [[0, 1], [0, 2], [1, 2]], \"order\": 3},"
        " \"family\": [{\"edges\": [[0, 1]], \"order\": 2}],"
        " \"kind\": \"circ\"}";
    CHECK_THROWS_AS(parse_instance(short_assign), std::invalid_argument);
}

TEST_CASE("edge list format") {
    Graph g(5, {{0, 1}, {2, 4}, {1, 3}});
    Graph back = parse_edge_list(format_edge_list(g));
    CHECK(back == g);

    Graph parsed = parse_edge_list("3 2\n0 1\n1 2\n");
    CHECK(parsed == Graph::path(3));

    // Loops survive; the parsed graph becomes loop-allowing.
    Graph with_loop(2, {{0, 0}, {0, 1}}, true);
    Graph loop_back = parse_edge_list(format_edge_list(with_loop));
    CHECK(loop_back.allows_loops());
    CHECK(loop_back.edges() == with_loop.edges());

    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), std::invalid_argument);   // count short
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 9\n"), std::invalid_argument);   // out of range
    CHECK_THROWS_AS(parse_edge_list(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("x y\n"), std::invalid_argument);
}

TEST_CASE("splitmix64 reproduces the reference stream") {
    SplitMix64 rng(0);
    CHECK(rng.next() == 0xe220a8397b1dcdafull);
    CHECK(rng.next() == 0x6e789e6aa1b965f4ull);
    CHECK(rng.next() == 0x06c45d188009454full);

    SplitMix64 rng42(42);
    CHECK(rng42.next() == 0xbdd732262feb6e95ull);
    CHECK(rng42.next() == 0x28efe333b266f103ull);
}

TEST_CASE("bounded draws stay in range and are deterministic") {
    SplitMix64 a(7), b(7);
    for (int i = 0; i < 500; ++i) {
        uint32_t x = a.below(7);
        CHECK(x < 7);
        CHECK(x == b.below(7));
    }
    SplitMix64 c(9);
    CHECK(c.below(1) == 0);
    for (int i = 0; i < 50; ++i) {
        SplitMix64 d(static_cast<uint64_t>(i));
        CHECK_FALSE(d.chance(0.0));
        CHECK(d.chance(1.0));
    }
}

TEST_CASE("random graphs respect order, density extremes and connectivity") {
    SplitMix64 rng(11);
    Graph empty = random_graph(rng, 5, 0.0, false);
    CHECK(empty.edge_count() == 0);

    Graph full = random_graph(rng, 5, 1.0, false);
    CHECK(full == Graph::complete(5));

    Graph tree = random_graph(rng, 6, 0.0, true);
    CHECK(tree.edge_count() == 5);
    CHECK(tree.is_connected());

    for (uint64_t seed = 0; seed < 20; ++seed) {
        SplitMix64 r1(seed), r2(seed);
        Graph g1 = random_graph(r1, 7, 0.4, true);
        Graph g2 = random_graph(r2, 7, 0.4, true);
        CHECK(g1 == g2);
        CHECK(g1.is_connected());
    }
}

TEST_CASE("random instances are deterministic and honor the parameters") {
    GenParams params;
    params.kind = ProductKind::otimes_h;
    params.base_order = 4;
    params.inner_order = 3;
    params.family_size = 2;
    params.member_mode = MemberMode::connected;
    AnyInstance a = random_instance(99, params);
    AnyInstance b = random_instance(99, params);
    REQUIRE(std::holds_alternative<OtimesInstance>(a));
    const auto& inst = std::get<OtimesInstance>(a);
    CHECK(inst == std::get<OtimesInstance>(b));
    CHECK(inst.base().order() == 4);
    CHECK(inst.base().is_connected());
    CHECK(inst.inner_order() == 3);
    CHECK(inst.family().size() == 2);
    for (const Graph& m : inst.family().members()) CHECK(m.is_connected());

    params.member_mode = MemberMode::delta_one;
    AnyInstance any_d1 = random_instance(5, params);
    const auto& d1 = std::get<OtimesInstance>(any_d1);
    for (const Graph& m : d1.family().members()) CHECK(m.min_degree() >= 1);

    params.member_mode = MemberMode::nonbipartite_components;
    params.inner_order = 4;
    AnyInstance any_nb = random_instance(5, params);
    const auto& nb = std::get<OtimesInstance>(any_nb);
    for (const Graph& m : nb.family().members())
        for (const auto& block : components(m).blocks)
            CHECK_FALSE(block.bipartition.has_value());

    params.kind = ProductKind::circ_h;
    params.member_mode = MemberMode::any;
    params.shared_inner = false;
    AnyInstance any_mixed = random_instance(7, params);
    const auto& mixed = std::get<CircInstance>(any_mixed);
    CHECK(mixed.base().order() == 4);
    for (const Graph& m : mixed.family().members()) {
        CHECK(m.order() >= 1);
        CHECK(m.order() <= 4);
    }

    GenParams impossible;
    impossible.member_mode = MemberMode::connected;
    impossible.edge_density = 0.0;
    impossible.inner_order = 3;
    CHECK_THROWS_AS(random_instance(1, impossible), std::invalid_argument);

    GenParams bad;
    bad.base_order = 0;
    CHECK_THROWS_AS(random_instance(1, bad), std::invalid_argument);
}
