#include "doctest.h"
#include "fixtures.hpp"
#include "gprod/product.hpp"
#include "gprod/structure.hpp"

using namespace gprod;

TEST_CASE("hexagon factors into K2 and a triangle") {
    auto d = decompose(Graph::cycle(6), 2);
    REQUIRE(d.has_value());
    CHECK(d->base == Graph::complete(2));
    REQUIRE(d->family.size() == 1);
    CHECK(d->family.member(0) == Graph::complete(3));
    CHECK(d->blocks == std::vector<std::vector<int>>{{0, 2, 4}, {1, 3, 5}});
    CHECK(d->bijections == std::vector<std::vector<int>>{{0, 2, 4}, {3, 5, 1}});
    CHECK(reconstructed_graph(*d) == Graph::cycle(6));
    CHECK(check_decomposition(Graph::cycle(6), d->blocks, d->bijections).ok);

    // Same call, same answer.
    auto again = decompose(Graph::cycle(6), 2);
    REQUIRE(again.has_value());
    CHECK(again->blocks == d->blocks);
    CHECK(again->bijections == d->bijections);
}

TEST_CASE("path on four vertices has no nontrivial factorization") {
    CHECK_FALSE(decompose(Graph::path(4), 2).has_value());
}

TEST_CASE("triangle factors only when loops are allowed") {
    CHECK_FALSE(decompose(Graph::cycle(3), 3).has_value());

    auto d = decompose(Graph::cycle(3), 3, true);
    REQUIRE(d.has_value());
    CHECK(d->blocks == std::vector<std::vector<int>>{{0}, {1}, {2}});
    CHECK(d->base == Graph::cycle(3));
    CHECK_FALSE(d->base.allows_loops());  // no within-block edges
    REQUIRE(d->family.size() == 1);
    CHECK(d->family.member(0) == Graph(1, {{0, 0}}, true));
    CHECK(reconstructed_graph(*d) == Graph::cycle(3));
}

TEST_CASE("four-cycle factors over a looped base") {
    CHECK_FALSE(decompose(Graph::cycle(4), 2).has_value());

    auto d = decompose(Graph::cycle(4), 2, true);
    REQUIRE(d.has_value());
    CHECK(d->blocks == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
    CHECK(d->base.allows_loops());
    CHECK(d->base.has_loop(0));
    CHECK(d->base.has_loop(1));
    CHECK(d->base.has_edge(0, 1));
    REQUIRE(d->family.size() == 1);
    CHECK(d->family.member(0) == Graph(2, {{0, 1}}, true));
    CHECK(reconstructed_graph(*d) == Graph::cycle(4));
}

TEST_CASE("complete graph factors over a looped base") {
    auto d = decompose(Graph::complete(4), 2, true);
    REQUIRE(d.has_value());
    CHECK(d->base.has_loop(0));
    CHECK(d->base.has_loop(1));
    CHECK(d->family.size() == 2);
    CHECK(reconstructed_graph(*d) == Graph::complete(4));
}

TEST_CASE("singleton blocks without loops fit only edgeless graphs") {
    auto d = decompose(Graph::edgeless(4), 4);
    REQUIRE(d.has_value());
    CHECK(d->base == Graph::edgeless(4));
    CHECK(d->family.size() == 1);
    CHECK(d->family.member(0) == Graph(1, {}));
    CHECK(reconstructed_graph(*d) == Graph::edgeless(4));

    CHECK_FALSE(decompose(Graph::complete(2), 2).has_value());

    auto loop = decompose(Graph::complete(2), 2, true);
    REQUIRE(loop.has_value());
    CHECK(loop->base == Graph::complete(2));
    CHECK(loop->family.member(0) == Graph(1, {{0, 0}}, true));
    CHECK(reconstructed_graph(*loop) == Graph::complete(2));
}

TEST_CASE("factorization search input validation") {
    CHECK_THROWS_AS(decompose(Graph(2, {{0, 0}}, true), 2), std::invalid_argument);
    CHECK_THROWS_AS(decompose(Graph::edgeless(0), 2), std::invalid_argument);
    CHECK_THROWS_AS(decompose(Graph::cycle(6), 1), std::invalid_argument);
    CHECK_THROWS_AS(decompose(Graph::cycle(5), 2), std::invalid_argument);  // 5 % 2 != 0
    CHECK_THROWS_AS(decompose(Graph::edgeless(14), 2, false, 12), precondition_error);
}

TEST_CASE("search statistics are populated") {
    DecomposeStats stats;
    auto d = decompose(Graph::cycle(6), 2, false, 12, &stats);
    REQUIRE(d.has_value());
    CHECK(stats.partitions_tried >= 1);
    CHECK(stats.assignment_nodes >= 1);
}

TEST_CASE("witness checking pinpoints violations") {
    Graph c6 = Graph::cycle(6);

    // Sizes must divide evenly across blocks.
    CHECK_FALSE(check_decomposition(c6, {{0, 1, 2, 3}, {4, 5}}, {{0, 1, 2, 3}, {4, 5}}).ok);
    // Blocks must partition the vertex set.
    CHECK_FALSE(check_decomposition(c6, {{0, 2, 4}, {1, 3, 3}}, {{0, 2, 4}, {1, 3, 3}}).ok);
    // Bijections must map onto their blocks.
    CHECK_FALSE(check_decomposition(c6, {{0, 2, 4}, {1, 3, 5}}, {{0, 2, 4}, {1, 3, 1}}).ok);

    // Dependent block.
    auto dep = check_decomposition(c6, {{0, 1, 2}, {3, 4, 5}}, {{0, 1, 2}, {3, 4, 5}});
    CHECK_FALSE(dep.ok);
    REQUIRE(dep.violation.has_value());
    CHECK(dep.violation->i == dep.violation->j);

    // Same-position cross pair hits an edge.
    auto diag = check_decomposition(c6, {{0, 2, 4}, {1, 3, 5}}, {{0, 2, 4}, {1, 3, 5}});
    CHECK_FALSE(diag.ok);
    REQUIRE(diag.violation.has_value());
    CHECK(diag.violation->i == 0);
    CHECK(diag.violation->j == 1);
    CHECK(diag.violation->u == diag.violation->v);

    // Asymmetric cross pair: 0-3 is an edge but 1-2 is not.
    Graph g(4, {{0, 3}});
    auto asym = check_decomposition(g, {{0, 1}, {2, 3}}, {{0, 1}, {2, 3}});
    CHECK_FALSE(asym.ok);
    REQUIRE(asym.violation.has_value());
    CHECK(asym.violation->i == 0);
    CHECK(asym.violation->j == 1);
    CHECK(asym.violation->u == 0);
    CHECK(asym.violation->v == 1);

    CHECK_THROWS_AS(build_decomposition(c6, {{0, 1, 2}, {3, 4, 5}}, {{0, 1, 2}, {3, 4, 5}}),
                    std::invalid_argument);
}

TEST_CASE("valid factorizations round-trip through their instance") {
    auto d = decompose(Graph::cycle(6), 2);
    REQUIRE(d.has_value());
    OtimesInstance inst = d->instance();
    ProductGraph p = otimes_h(inst);
    const auto& map = d->reconstruction();
    REQUIRE(static_cast<int>(map.size()) == p.order());
    // The reconstruction maps product ids onto the original vertices.
    std::vector<int> sorted_map = map;
    std::sort(sorted_map.begin(), sorted_map.end());
    for (int v = 0; v < 6; ++v) CHECK(sorted_map[v] == v);
}

TEST_CASE("left regrouping of edge-indexed products") {
    Graph g = Graph::complete(2);
    OtimesInstance inner = fx::two_c6();
    OtimesInstance grouped = assoc_otimes_left(g, inner);
    CHECK(otimes_h(grouped).graph() ==
          direct_product(g, otimes_h(inner).graph()).graph());

    Graph g2 = Graph::path(3);
    OtimesInstance grouped2 = assoc_otimes_left(g2, fx::four_c3());
    CHECK(otimes_h(grouped2).graph() ==
          direct_product(g2, otimes_h(fx::four_c3()).graph()).graph());
}

TEST_CASE("right regrouping needs a symmetric assignment") {
    Graph g = Graph::complete(2);
    Graph h = Graph::complete(2);
    Graph base = direct_product(g, h).graph();  // matching {0-3, 1-2}
    GraphFamily fam({Graph(2, {{0, 1}}), Graph::edgeless(2)});

    OtimesInstance symmetric(base, fam, EdgeAssignment::constant(base, 0));
    CHECK_FALSE(otimes_symmetry_violation(g, h, symmetric).has_value());
    OtimesInstance regrouped = assoc_otimes_right(g, h, symmetric);
    CHECK(regrouped.base() == g);
    CHECK(otimes_h(regrouped).graph() == otimes_h(symmetric).graph());

    OtimesInstance skewed(base, fam,
                          EdgeAssignment(std::map<Edge, int>{{{0, 3}, 0}, {{1, 2}, 1}}));
    auto bad = otimes_symmetry_violation(g, h, skewed);
    REQUIRE(bad.has_value());
    CHECK(*bad == std::array<int, 4>{0, 1, 0, 1});
    CHECK_THROWS_AS(assoc_otimes_right(g, h, skewed), precondition_error);

    // The instance base must actually be the direct product.
    OtimesInstance mismatched(Graph::complete(2), GraphFamily({Graph(2, {{0, 1}})}),
                              EdgeAssignment::constant(Graph::complete(2), 0));
    CHECK_THROWS_AS(otimes_symmetry_violation(g, h, mismatched), std::invalid_argument);
}

TEST_CASE("right regrouping over a nonconstant symmetric assignment") {
    Graph g = Graph::complete(2);
    Graph h = Graph::path(3);
    Graph base = direct_product(g, h).graph();
    GraphFamily fam({Graph(2, {{0, 1}}), Graph::edgeless(2)});
    // Symmetric choice: the member depends only on the underlying h-edge.
    std::map<Edge, int> values;
    for (const auto& e : base.edges()) {
        Edge he = make_edge(e.first % 3, e.second % 3);
        values[e] = (he == make_edge(0, 1)) ? 0 : 1;
    }
    OtimesInstance inst(base, fam, EdgeAssignment(values));
    CHECK_FALSE(otimes_symmetry_violation(g, h, inst).has_value());
    OtimesInstance regrouped = assoc_otimes_right(g, h, inst);
    CHECK(otimes_h(regrouped).graph() == otimes_h(inst).graph());
}

TEST_CASE("left regrouping of vertex-indexed products") {
    Graph g = Graph::complete(2);
    CircInstance inner = fx::c3_circ();
    CircInstance grouped = assoc_circ_left(g, inner);
    CHECK(circ_h(grouped).graph() == lex_product(g, circ_h(inner).graph()).graph());

    CircInstance diamond = fx::diamond_circ();
    CircInstance grouped2 = assoc_circ_left(Graph::path(3), diamond);
    CHECK(circ_h(grouped2).graph() ==
          lex_product(Graph::path(3), circ_h(diamond).graph()).graph());
}

TEST_CASE("right regrouping of vertex-indexed products") {
    Graph g = Graph::complete(2);
    Graph h = Graph::path(3);
    Graph base = lex_product(g, h).graph();
    GraphFamily fam({Graph::complete(2), Graph::edgeless(2)});
    std::vector<int> values{0, 1, 0, 1, 0, 1};
    CircInstance inst(base, fam, VertexAssignment(values));
    CircInstance regrouped = assoc_circ_right(g, h, inst);
    CHECK(regrouped.base() == g);
    CHECK(circ_h(regrouped).graph() == circ_h(inst).graph());

    // Base mismatch is rejected.
    Graph wrong = Graph::cycle(6);
    GraphFamily one({Graph::complete(2)});
    CircInstance bad(wrong, one, VertexAssignment::constant(wrong, 0));
    CHECK_THROWS_AS(assoc_circ_right(g, h, bad), std::invalid_argument);
}
