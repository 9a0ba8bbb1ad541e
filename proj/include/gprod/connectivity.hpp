#pragma once

#include "gprod/product.hpp"

namespace gprod {

// Connectivity answer with an exact component count and, when disconnected,
// a witness: a nonempty proper vertex set with no edges leaving it.
struct ConnectivityVerdict {
    bool connected = true;
    int component_count = 1;
    std::vector<int> witness;  // empty when connected
    std::string method;
};

ConnectivityVerdict bfs_connectivity(const Graph& g);

// One set per ordered base incidence (a,b) and component C of the member on
// ab: for bipartite C the set {a}x(side 1) u {b}x(side 2), for nonbipartite C
// the set {a,b}xV(C). An isolated inner vertex x is a bipartite component
// with an empty second side, so it contributes the singleton {(a,x)}.
struct LabeledSet {
    Edge base_edge;
    int component_index;
    int endpoint;  // the a of the ordered incidence (a,b)
    std::vector<int> vertices;  // product ids, row-major, sorted
};

struct SetFamily {
    int ground_size = 0;
    std::vector<LabeledSet> sets;
};

SetFamily fiber_sets(const OtimesInstance& inst);

// One vertex per set, in order; edges join sets with a common element.
// Equal sets under distinct labels stay distinct vertices. No loops.
Graph intersection_graph(const std::vector<std::vector<int>>& sets);
Graph intersection_graph(const SetFamily& fam);

// Connectivity of the edge-indexed product for a connected nontrivial base
// whose assigned members are all connected and nontrivial: connected iff the
// base or the union graph is nonbipartite. When both are bipartite the
// product has exactly two components and the witness is one of them.
ConnectivityVerdict predict_otimes_connectivity(const OtimesInstance& inst);

// Connectivity decided through the intersection graph of the fiber sets.
// Exact whenever the base is connected and nontrivial; component counts
// agree with BFS on the constructed product.
ConnectivityVerdict otimes_connected_via_family(const OtimesInstance& inst);

// Certificate that the product is connected, when one of the one- or
// two-edge sufficient conditions fires. Never certifies a disconnected
// product; absence of a certificate decides nothing.
struct SufficiencyCertificate {
    enum class Kind {
        one_edge,            // member on e nonbipartite and connected
        two_edge_nonbip,     // component of the member on bc nonbipartite, meets both sides of the member on ab
        two_edge_bipartite,  // a stable side of that component meets both sides of the member on ab
    };
    Kind kind;
    Edge e1;                 // the edge ab (or e for one_edge)
    Edge e2;                 // the edge bc (unused for one_edge)
    int shared_vertex = -1;  // b
    int component_index = -1;
    int side = -1;           // which stable side fired, for two_edge_bipartite
};

std::optional<SufficiencyCertificate> sufficient_connectivity_check(const OtimesInstance& inst);

// Witness that the intersection graph of all blocks of the given partitions
// is disconnected: one nonempty proper subfamily per partition, all with the
// same union, which is a proper subset of the ground set. Exists iff that
// intersection graph is disconnected.
struct PartitionWitness {
    std::vector<std::vector<std::vector<int>>> subfamilies;  // one list of blocks per partition
    std::vector<int> common_union;
};

std::optional<PartitionWitness> partition_disconnection_witness(const std::vector<Partition>& parts);

// Disconnection of the edge-indexed product via stable partitions. Two
// regimes: (a) connected nontrivial base and every component of every
// assigned member nonbipartite, one partition per base edge; (b) base a star
// with the assignment surjective and members of minimum degree at least 1,
// one partition per member. A witness is returned iff the product is
// disconnected.
std::optional<PartitionWitness> predict_disconnection_via_partitions(const OtimesInstance& inst);

struct VertexCut {
    int value = 0;
    std::vector<int> vertices;  // a minimum separating set, empty for the conventions
};

struct EdgeCut {
    int value = 0;
    std::vector<Edge> edges;
};

// Vertex connectivity. Conventions: disconnected and one-vertex graphs give
// 0, complete graphs n-1. Subset enumeration up to enum_guard vertices,
// vertex-capacity max-flow beyond; loops are ignored.
VertexCut kappa_exact(const Graph& g, int enum_guard = 12);

// Edge connectivity, same conventions (complete K_n gives n-1 = its degree).
// Subset enumeration while the graph has at most enum_edge_guard edges,
// max-flow beyond.
EdgeCut lambda_exact(const Graph& g, int enum_edge_guard = 20);

// Vertex connectivity of the vertex-indexed product over a connected base
// with fibers on one vertex set: (n-1)|V| + min over fibers of their vertex
// connectivity when the base is complete on n vertices, kappa(base)*|V|
// otherwise. Disconnected fibers are fine (their connectivity is 0).
int kappa_circ(const CircInstance& inst);

// Edge connectivity of the same product for a connected base on at least two
// vertices and nontrivial fibers: min of lambda(base)*|V|^2 and the product's
// minimum degree.
int lambda_circ(const CircInstance& inst);

}  // namespace gprod
