#pragma once

#include <map>
#include <optional>

#include "gprod/graph.hpp"

namespace gprod {

// Nonempty list of member graphs. shared_inner_order() is the common order
// when every member has the same one; edge-indexed products require it.
// Repeated members are kept as given (the list is a multiset).
class GraphFamily {
public:
    explicit GraphFamily(std::vector<Graph> members);

    const std::vector<Graph>& members() const { return members_; }
    const Graph& member(int i) const;
    int size() const { return static_cast<int>(members_.size()); }
    std::optional<int> shared_inner_order() const { return shared_order_; }

    bool operator==(const GraphFamily& o) const { return members_ == o.members_; }

private:
    std::vector<Graph> members_;
    std::optional<int> shared_order_;
};

// Map from base edges to member indices. Totality and index ranges are
// validated when the instance is assembled.
class EdgeAssignment {
public:
    EdgeAssignment() = default;
    explicit EdgeAssignment(std::map<Edge, int> values) : values_(std::move(values)) {}
    static EdgeAssignment constant(const Graph& base, int index);

    int at(Edge e) const;
    const std::map<Edge, int>& values() const { return values_; }
    bool operator==(const EdgeAssignment& o) const { return values_ == o.values_; }

private:
    std::map<Edge, int> values_;
};

// Member index per base vertex; size must equal the base order.
class VertexAssignment {
public:
    VertexAssignment() = default;
    explicit VertexAssignment(std::vector<int> values) : values_(std::move(values)) {}
    static VertexAssignment constant(const Graph& base, int index);

    int at(int v) const;
    const std::vector<int>& values() const { return values_; }
    bool operator==(const VertexAssignment& o) const { return values_ == o.values_; }

private:
    std::vector<int> values_;
};

// Validated input for the edge-indexed product: members all live on one
// vertex set, and every base edge has a member.
class OtimesInstance {
public:
    OtimesInstance(Graph base, GraphFamily family, EdgeAssignment assignment);

    const Graph& base() const { return base_; }
    const GraphFamily& family() const { return family_; }
    const EdgeAssignment& assignment() const { return assignment_; }
    int inner_order() const { return inner_order_; }
    const Graph& member_for(Edge e) const { return family_.member(assignment_.at(e)); }

    bool operator==(const OtimesInstance& o) const {
        return base_ == o.base_ && family_ == o.family_ && assignment_ == o.assignment_;
    }

private:
    Graph base_;
    GraphFamily family_;
    EdgeAssignment assignment_;
    int inner_order_;
};

// Validated input for the vertex-indexed product; member orders may differ.
class CircInstance {
public:
    CircInstance(Graph base, GraphFamily family, VertexAssignment assignment);

    const Graph& base() const { return base_; }
    const GraphFamily& family() const { return family_; }
    const VertexAssignment& assignment() const { return assignment_; }
    const Graph& fiber(int v) const { return family_.member(assignment_.at(v)); }

    bool operator==(const CircInstance& o) const {
        return base_ == o.base_ && family_ == o.family_ && assignment_ == o.assignment_;
    }

private:
    Graph base_;
    GraphFamily family_;
    VertexAssignment assignment_;
};

// Union of the edge sets of all members assigned to base edges, on the
// shared vertex set.
Graph union_graph(const OtimesInstance& inst);

// Same union restricted to the edges incident with base vertex a.
Graph local_union(const OtimesInstance& inst, int a);

// Union over the whole family, assigned or not. Requires a shared order.
Graph sigma_gamma(const GraphFamily& family);

}  // namespace gprod
