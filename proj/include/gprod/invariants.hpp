#pragma once

#include "gprod/product.hpp"

namespace gprod {

struct VertexSetResult {
    int value = 0;
    std::vector<int> witness;  // the extremal set, sorted
};

struct ColoringResult {
    int value = 0;
    std::vector<int> colors;  // color per vertex, 0-based
};

// Exact solvers. Deterministic: branching follows vertex index order, so the
// witnesses are reproducible. All refuse loops (throw) and orders above the
// guard (throw precondition_error). Guards are capped at 64 internally.
VertexSetResult alpha_exact(const Graph& g, int guard = 24);  // max independent set
VertexSetResult omega_exact(const Graph& g, int guard = 24);  // max clique
ColoringResult chi_exact(const Graph& g, int guard = 20);     // proper coloring, fewest colors
VertexSetResult gamma_exact(const Graph& g, int guard = 20);  // min dominating set
// Min total dominating set; requires min degree >= 1.
VertexSetResult gamma_t_exact(const Graph& g, int guard = 20);

// max{alpha(base)*|V|, alpha(union)*|base|} for the edge-indexed product.
int alpha_otimes_lower(const OtimesInstance& inst, int guard = 24);

// Independence number of the vertex-indexed product: the best weighted
// independent set of the base with weights alpha(fiber). Exact for bases on
// at least two vertices; hypothesis_met is false for a one-vertex base
// (where the value alpha(fiber) is still returned).
struct AlphaCircResult {
    int value = 0;
    bool hypothesis_met = true;
    std::vector<int> base_set;  // the maximizing independent set of the base
};
AlphaCircResult alpha_circ(const CircInstance& inst, int guard = 24);

// gamma(base) + min over base vertices a of gamma(local union at a) - 1,
// plus the weaker variant using the full union graph. Both also bound the
// total domination number of the product.
struct GammaOtimesLower {
    int bound = 0;           // via local unions
    int union_bound = 0; // via the union graph
};
GammaOtimesLower gamma_otimes_lower(const OtimesInstance& inst, int guard = 20);

// 3*gamma(base)*gamma(f) for a spanning common subgraph f of every assigned
// member (checked; throws when some assigned member misses an edge of f).
int gamma_otimes_upper(const OtimesInstance& inst, const Graph& f, int guard = 20);

// Dominating set of the edge-indexed product assembled from a total
// dominating set D of the base with a dominating subset A, and per-edge total
// dominating sets D_e with dominating subsets B_e. All six roles are
// validated; violations name the offending set. Returns product vertex ids.
std::vector<int> dominating_set_construct(const OtimesInstance& inst,
                                          const std::vector<int>& base_total_dominating,
                                          const std::map<Edge, std::vector<int>>& edge_total_dominating,
                                          const std::vector<int>& base_dominating_subset,
                                          const std::map<Edge, std::vector<int>>& edge_dominating_subsets);

// min over dominating sets D of the base of the sum of gamma(fiber(a)) for a
// in D. Upper bound for the vertex-indexed product's domination number.
struct GammaCircUpper {
    int value = 0;
    std::vector<int> base_set;
};
GammaCircUpper gamma_circ_upper(const CircInstance& inst, int guard = 20);

// chi and omega of the edge-indexed product are at most the min over the
// base and the union graph.
struct ChiOmegaBounds {
    int chi_bound = 0;
    int omega_bound = 0;
};
ChiOmegaBounds chi_omega_otimes_bounds(const OtimesInstance& inst, int guard = 20);

// Assignment realizing a clique of size k = min{omega(base), omega(family
// union)} in the product: member edges covering a k-clique of the family
// union are routed onto a k-clique of the base; every other base edge gets
// member 0.
struct CliqueAssignment {
    EdgeAssignment assignment;
    int clique_size = 0;
    std::vector<int> base_clique;
    std::vector<int> inner_clique;
};
CliqueAssignment clique_realizing_assignment(const Graph& base, const GraphFamily& family,
                                             int guard = 24);

// chi(base) * max over fibers of chi(fiber).
int chi_circ_upper(const CircInstance& inst, int guard = 20);

// Replace every fiber by a complete graph on chi(fiber) vertices; the
// product's chromatic number is unchanged.
CircInstance reduce_to_complete_fibers(const CircInstance& inst, int guard = 20);

// Disjointness graph on all r-subsets of {0..s-1}, one group per distinct
// demand (duplicates collapse), groups by increasing demand, subsets within
// a group in colexicographic order.
Graph kneser_graph(const std::vector<int>& demands, int s);

// Assigns demand(v) colors to each vertex so that adjacent vertices get
// disjoint sets; value is the fewest total colors. Equals the chromatic
// number of the vertex-indexed product with complete fibers of the demanded
// orders. Demands of all 1 reduce to ordinary coloring.
struct TupleColoringResult {
    int value = 0;
    std::vector<std::vector<int>> sets;  // color set per vertex
};
TupleColoringResult h_tuple_chromatic(const Graph& g, const std::vector<int>& demands,
                                      int guard = 20);

}  // namespace gprod
