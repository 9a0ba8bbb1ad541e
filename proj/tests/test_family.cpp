#include "doctest.h"
#include "fixtures.hpp"
#include "gprod/family.hpp"

using namespace gprod;

TEST_CASE("family requires members and reports a shared order") {
    CHECK_THROWS_AS(GraphFamily({}), std::invalid_argument);

    GraphFamily same({Graph::complete(3), Graph::path(3)});
    CHECK(same.size() == 2);
    CHECK(same.shared_inner_order() == 3);

    GraphFamily mixed({Graph::complete(3), Graph::path(4)});
    CHECK_FALSE(mixed.shared_inner_order().has_value());

    CHECK_THROWS_AS(same.member(2), std::invalid_argument);
    CHECK(same.member(1) == Graph::path(3));
}

TEST_CASE("edge assignment lookup") {
    Graph base = Graph::path(3);
    EdgeAssignment h = EdgeAssignment::constant(base, 1);
    CHECK(h.at({0, 1}) == 1);
    CHECK(h.at({1, 2}) == 1);
    CHECK_THROWS_AS(h.at({0, 2}), std::invalid_argument);
}

TEST_CASE("otimes instance validation") {
    Graph base = Graph::path(3);
    GraphFamily fam({Graph::complete(2), Graph::edgeless(2)});

    CHECK_NOTHROW(OtimesInstance(base, fam, EdgeAssignment::constant(base, 0)));

    // Missing edge.
    CHECK_THROWS_AS(OtimesInstance(base, fam,
                                   EdgeAssignment(std::map<Edge, int>{{{0, 1}, 0}})),
                    std::invalid_argument);
    // Entry that is not a base edge.
    CHECK_THROWS_AS(
        OtimesInstance(base, fam,
                       EdgeAssignment(std::map<Edge, int>{
                           {{0, 1}, 0}, {{1, 2}, 0}, {{0, 2}, 0}})),
        std::invalid_argument);
    // Member index out of range.
    CHECK_THROWS_AS(OtimesInstance(base, fam, EdgeAssignment::constant(base, 2)),
                    std::invalid_argument);
    // Members must share a vertex set.
    GraphFamily mixed({Graph::complete(2), Graph::complete(3)});
    CHECK_THROWS_AS(OtimesInstance(base, mixed, EdgeAssignment::constant(base, 0)),
                    std::invalid_argument);

    OtimesInstance inst = fx::four_c3();
    CHECK(inst.inner_order() == 4);
    CHECK(inst.member_for({0, 1}) == fx::f_xz_yt());
    CHECK(inst.member_for({0, 2}) == fx::f_xt_yz());
}

TEST_CASE("circ instance validation allows mixed orders") {
    Graph base = Graph::complete(2);
    GraphFamily mixed({Graph::complete(2), Graph::complete(3)});
    CircInstance inst(base, mixed, VertexAssignment({0, 1}));
    CHECK(inst.fiber(1) == Graph::complete(3));

    CHECK_THROWS_AS(CircInstance(base, mixed, VertexAssignment({0})), std::invalid_argument);
    CHECK_THROWS_AS(CircInstance(base, mixed, VertexAssignment({0, 2})), std::invalid_argument);
    CHECK_THROWS_AS(CircInstance(base, mixed, VertexAssignment({0, 1, 0})),
                    std::invalid_argument);
}

TEST_CASE("union graphs") {
    OtimesInstance inst = fx::two_c6();
    // F1 = {02,13} on two edges, F2 = {03,12} on one: union is 02,13,03,12.
    CHECK(union_graph(inst).edges() ==
          std::vector<Edge>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});

    OtimesInstance full = fx::four_c3();
    CHECK(union_graph(full) == Graph::complete(4));

    // Base vertex 1 touches edges 01 and 12, both carrying F1.
    CHECK(local_union(fx::two_c6(), 1).edges() == std::vector<Edge>{{0, 2}, {1, 3}});
    CHECK(local_union(fx::two_c6(), 0).edges() ==
          std::vector<Edge>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK_THROWS_AS(local_union(fx::two_c6(), 3), std::invalid_argument);

    // sigma includes unassigned members.
    GraphFamily fam({Graph(3, {{0, 1}}), Graph(3, {{1, 2}})});
    CHECK(sigma_gamma(fam).edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    GraphFamily mixed({Graph::complete(2), Graph::complete(3)});
    CHECK_THROWS_AS(sigma_gamma(mixed), std::invalid_argument);
}
