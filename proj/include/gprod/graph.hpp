#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gprod {

// Thrown when an operation's hypotheses are not met (as opposed to malformed
// input, which raises plain std::invalid_argument). Callers that probe several
// characterizations catch this and fall back to another route.
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Undirected edge, stored normalized with first <= second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u <= v ? Edge{u, v} : Edge{v, u}; }

// Finite undirected graph on dense vertices 0..order-1. Immutable after
// construction; the edge list is normalized, sorted and duplicate-free, and a
// pair (v,v) is legal only when allows_loops is set. Neighbor lists are
// sorted; v appears in its own list exactly when it carries a loop, and
// degree(v) counts a loop once.
class Graph {
public:
    Graph() = default;
    Graph(int order, std::vector<Edge> edges, bool allows_loops = false);

    static Graph edgeless(int n);
    static Graph complete(int n);
    static Graph cycle(int n);  // n >= 3
    static Graph path(int n);   // n >= 1
    static Graph star(int leaves);  // center 0, leaves 1..n

    int order() const { return order_; }
    bool allows_loops() const { return allows_loops_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    int min_degree() const;  // 0 for the empty graph
    int max_degree() const;
    bool has_edge(int u, int v) const;
    bool has_loop(int v) const { return has_edge(v, v); }
    bool loopless() const;

    bool is_connected() const;  // order <= 1 counts as connected
    bool is_bipartite() const;
    bool is_complete() const;   // all non-loop pairs adjacent
    bool is_nontrivial() const { return order_ >= 2; }

    bool operator==(const Graph& o) const {
        return order_ == o.order_ && allows_loops_ == o.allows_loops_ && edges_ == o.edges_;
    }
    bool operator!=(const Graph& o) const { return !(*this == o); }

private:
    int order_ = 0;
    bool allows_loops_ = false;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

Graph complement(const Graph& g);                       // loopless complement
Graph disjoint_union(const Graph& a, const Graph& b);   // b's vertices shifted by a.order()
Graph union_on_same_vertices(const Graph& a, const Graph& b);  // edge union, equal orders required

// One connected component: sorted vertex list plus, when the component induces
// a bipartite subgraph, its two stable sides. V1 holds the component's
// smallest vertex; V2 may be empty (isolated vertex). A loop makes its
// component nonbipartite.
struct ComponentBlock {
    std::vector<int> vertices;
    std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition;
};

// Components ordered by smallest contained vertex.
struct ComponentDecomposition {
    std::vector<ComponentBlock> blocks;
    int count() const { return static_cast<int>(blocks.size()); }
    bool all_bipartite() const;
};

ComponentDecomposition components(const Graph& g);

// Partition of {0..ground_size-1} into nonempty disjoint covering blocks.
// Construction validates; blocks are stored with sorted contents, in the
// order given.
class Partition {
public:
    Partition(int ground_size, std::vector<std::vector<int>> blocks);
    int ground_size() const { return ground_size_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    bool operator==(const Partition& o) const {
        return ground_size_ == o.ground_size_ && blocks_ == o.blocks_;
    }

private:
    int ground_size_;
    std::vector<std::vector<int>> blocks_;
};

// Blocks are, per component: both stable sides for a bipartite component
// (empty sides omitted, V1 first), or the whole vertex set for a
// nonbipartite one. Refines the component partition.
Partition stable_partition(const Graph& f);

// Subgraph induced by s (deduplicated), relabeled 0..|s|-1 in numeric order.
Graph induced_subgraph(const Graph& g, std::vector<int> s);

struct IsomorphismResult {
    enum class Status { isomorphic, not_isomorphic, refused };
    Status status;
    std::vector<int> mapping;  // image of each vertex of the first graph, when isomorphic

    bool isomorphic() const { return status == Status::isomorphic; }
    bool refused() const { return status == Status::refused; }
};

// Ordered backtracking with degree pruning; the mapping returned is the
// lexicographically least isomorphism. Refuses when either order exceeds
// the guard.
IsomorphismResult is_isomorphic(const Graph& g, const Graph& h, int guard = 16);

}  // namespace gprod
