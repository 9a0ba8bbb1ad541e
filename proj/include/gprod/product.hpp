#pragma once

#include "gprod/family.hpp"

namespace gprod {

enum class ProductKind { direct, lexicographic, otimes_h, circ_h };

std::string to_string(ProductKind k);

// A constructed product: the graph plus the bijection between its dense
// vertex ids and (base vertex, inner vertex) pairs. Edge-indexed products lay
// fibers out row-major (index = a*inner+x); vertex-indexed products use
// prefix sums of the fiber sizes, which coincides with row-major when the
// fibers share an order.
class ProductGraph {
public:
    ProductGraph(Graph graph, ProductKind kind, std::vector<int> fiber_sizes);

    const Graph& graph() const { return graph_; }
    ProductKind kind() const { return kind_; }
    int order() const { return graph_.order(); }
    int base_order() const { return static_cast<int>(fiber_sizes_.size()); }
    int fiber_size(int a) const;
    int index_of(int a, int x) const;
    std::pair<int, int> pair_of(int idx) const;
    const std::vector<int>& offsets() const { return offsets_; }

private:
    Graph graph_;
    ProductKind kind_;
    std::vector<int> fiber_sizes_;
    std::vector<int> offsets_;
};

// (a,x)(b,y) is an edge iff ab is a base edge and xy an edge of the member
// on ab. Constant assignments reproduce the direct product.
ProductGraph otimes_h(const OtimesInstance& inst);

// (a,x)(b,y) is an edge iff ab is a base edge, or a = b and xy an edge of
// the fiber on a. Constant assignments reproduce the lexicographic product.
ProductGraph circ_h(const CircInstance& inst);

ProductGraph direct_product(const Graph& g, const Graph& h);
ProductGraph lex_product(const Graph& g, const Graph& h);

// Degree of (a,x) by the closed formulas; must equal the constructed degree.
int product_degree(const OtimesInstance& inst, int a, int x);
int product_degree(const CircInstance& inst, int a, int x);

// Minimum degree of the vertex-indexed product over a nontrivial base with
// fibers on one vertex set: delta(G)*|V| + min over minimum-degree base
// vertices of delta of their fiber.
int min_degree_circ(const CircInstance& inst);

}  // namespace gprod
