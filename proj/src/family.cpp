#include "gprod/family.hpp"

#include <algorithm>

namespace gprod {

GraphFamily::GraphFamily(std::vector<Graph> members) : members_(std::move(members)) {
    if (members_.empty()) throw std::invalid_argument("family must have at least one member");
    bool same = true;
    for (const auto& m : members_)
        if (m.order() != members_.front().order()) same = false;
    if (same) shared_order_ = members_.front().order();
}

const Graph& GraphFamily::member(int i) const {
    if (i < 0 || i >= size()) throw std::invalid_argument("family member index out of range");
    return members_[i];
}

EdgeAssignment EdgeAssignment::constant(const Graph& base, int index) {
    std::map<Edge, int> values;
    for (auto e : base.edges()) values[e] = index;
    return EdgeAssignment(std::move(values));
}

int EdgeAssignment::at(Edge e) const {
    auto it = values_.find(make_edge(e.first, e.second));
    if (it == values_.end())
        throw std::invalid_argument("no member assigned to edge " + std::to_string(e.first) +
                                    "-" + std::to_string(e.second));
    return it->second;
}

VertexAssignment VertexAssignment::constant(const Graph& base, int index) {
    return VertexAssignment(std::vector<int>(base.order(), index));
}

int VertexAssignment::at(int v) const {
    if (v < 0 || v >= static_cast<int>(values_.size()))
        throw std::invalid_argument("no member assigned to vertex " + std::to_string(v));
    return values_[v];
}

OtimesInstance::OtimesInstance(Graph base, GraphFamily family, EdgeAssignment assignment)
    : base_(std::move(base)), family_(std::move(family)), assignment_(std::move(assignment)) {
    auto shared = family_.shared_inner_order();
    if (!shared)
        throw std::invalid_argument("edge-indexed product requires members on one vertex set");
    inner_order_ = *shared;
    for (auto e : base_.edges()) {
        int idx = assignment_.at(e);  // throws when the assignment is not total
        if (idx < 0 || idx >= family_.size())
            throw std::invalid_argument("assignment index " + std::to_string(idx) +
                                        " out of range for edge " + std::to_string(e.first) +
                                        "-" + std::to_string(e.second));
    }
    for (auto [e, idx] : assignment_.values())
        if (!base_.has_edge(e.first, e.second))
            throw std::invalid_argument("assignment names nonexistent edge " +
                                        std::to_string(e.first) + "-" + std::to_string(e.second));
}

CircInstance::CircInstance(Graph base, GraphFamily family, VertexAssignment assignment)
    : base_(std::move(base)), family_(std::move(family)), assignment_(std::move(assignment)) {
    if (static_cast<int>(assignment_.values().size()) != base_.order())
        throw std::invalid_argument("vertex assignment must cover every base vertex");
    for (int v = 0; v < base_.order(); ++v) {
        int idx = assignment_.at(v);
        if (idx < 0 || idx >= family_.size())
            throw std::invalid_argument("assignment index " + std::to_string(idx) +
                                        " out of range for vertex " + std::to_string(v));
    }
}

Graph union_graph(const OtimesInstance& inst) {
    std::vector<Edge> es;
    bool loops = false;
    for (auto e : inst.base().edges()) {
        const Graph& m = inst.member_for(e);
        es.insert(es.end(), m.edges().begin(), m.edges().end());
        loops = loops || m.allows_loops();
    }
    return Graph(inst.inner_order(), std::move(es), loops);
}

Graph local_union(const OtimesInstance& inst, int a) {
    std::vector<Edge> es;
    bool loops = false;
    for (int b : inst.base().neighbors(a)) {
        const Graph& m = inst.member_for(make_edge(a, b));
        es.insert(es.end(), m.edges().begin(), m.edges().end());
        loops = loops || m.allows_loops();
    }
    return Graph(inst.inner_order(), std::move(es), loops);
}

Graph sigma_gamma(const GraphFamily& family) {
    auto shared = family.shared_inner_order();
    if (!shared)
        throw std::invalid_argument("family union requires members on one vertex set");
    std::vector<Edge> es;
    bool loops = false;
    for (const auto& m : family.members()) {
        es.insert(es.end(), m.edges().begin(), m.edges().end());
        loops = loops || m.allows_loops();
    }
    return Graph(*shared, std::move(es), loops);
}

}  // namespace gprod
