#include "gprod/product.hpp"

#include <algorithm>
#include <numeric>

namespace gprod {

std::string to_string(ProductKind k) {
    switch (k) {
        case ProductKind::direct: return "direct";
        case ProductKind::lexicographic: return "lexicographic";
        case ProductKind::otimes_h: return "otimes_h";
        case ProductKind::circ_h: return "circ_h";
    }
    return "?";
}

ProductGraph::ProductGraph(Graph graph, ProductKind kind, std::vector<int> fiber_sizes)
    : graph_(std::move(graph)), kind_(kind), fiber_sizes_(std::move(fiber_sizes)) {
    offsets_.assign(fiber_sizes_.size() + 1, 0);
    for (size_t a = 0; a < fiber_sizes_.size(); ++a)
        offsets_[a + 1] = offsets_[a] + fiber_sizes_[a];
    if (offsets_.back() != graph_.order())
        throw std::invalid_argument("fiber sizes do not sum to the product order");
}

int ProductGraph::fiber_size(int a) const {
    if (a < 0 || a >= base_order()) throw std::invalid_argument("base vertex out of range");
    return fiber_sizes_[a];
}

int ProductGraph::index_of(int a, int x) const {
    if (x < 0 || x >= fiber_size(a)) throw std::invalid_argument("inner vertex out of range");
    return offsets_[a] + x;
}

std::pair<int, int> ProductGraph::pair_of(int idx) const {
    if (idx < 0 || idx >= order()) throw std::invalid_argument("product vertex out of range");
    int a = static_cast<int>(std::upper_bound(offsets_.begin(), offsets_.end(), idx) -
                             offsets_.begin()) - 1;
    return {a, idx - offsets_[a]};
}

namespace {

ProductGraph build_otimes(const OtimesInstance& inst, ProductKind kind) {
    const Graph& g = inst.base();
    int inner = inst.inner_order();
    auto id = [inner](int a, int x) { return a * inner + x; };
    std::vector<Edge> es;
    bool loops = false;
    for (auto [a, b] : g.edges()) {
        const Graph& m = inst.member_for({a, b});
        for (auto [x, y] : m.edges()) {
            if (a == b) {
                es.push_back(make_edge(id(a, x), id(a, y)));
            } else if (x == y) {
                es.push_back(make_edge(id(a, x), id(b, x)));
            } else {
                es.push_back(make_edge(id(a, x), id(b, y)));
                es.push_back(make_edge(id(a, y), id(b, x)));
            }
        }
        loops = loops || (a == b && m.allows_loops());
    }
    Graph pg(g.order() * inner, std::move(es), loops);
    return ProductGraph(std::move(pg), kind, std::vector<int>(g.order(), inner));
}

ProductGraph build_circ(const CircInstance& inst, ProductKind kind) {
    const Graph& g = inst.base();
    std::vector<int> sizes(g.order());
    std::vector<int> off(g.order() + 1, 0);
    for (int v = 0; v < g.order(); ++v) {
        sizes[v] = inst.fiber(v).order();
        off[v + 1] = off[v] + sizes[v];
    }
    std::vector<Edge> es;
    bool loops = false;
    for (auto [a, b] : g.edges()) {
        if (a == b) {
            // A base loop joins the fiber to itself: all pairs, loops included.
            for (int x = 0; x < sizes[a]; ++x)
                for (int y = x; y < sizes[a]; ++y) es.push_back({off[a] + x, off[a] + y});
            loops = true;
        } else {
            for (int x = 0; x < sizes[a]; ++x)
                for (int y = 0; y < sizes[b]; ++y) es.push_back(make_edge(off[a] + x, off[b] + y));
        }
    }
    for (int v = 0; v < g.order(); ++v) {
        const Graph& m = inst.fiber(v);
        for (auto [x, y] : m.edges()) es.push_back({off[v] + x, off[v] + y});
        loops = loops || m.allows_loops();
    }
    Graph pg(off.back(), std::move(es), loops);
    return ProductGraph(std::move(pg), kind, std::move(sizes));
}

}  // namespace

ProductGraph otimes_h(const OtimesInstance& inst) {
    return build_otimes(inst, ProductKind::otimes_h);
}

ProductGraph circ_h(const CircInstance& inst) { return build_circ(inst, ProductKind::circ_h); }

ProductGraph direct_product(const Graph& g, const Graph& h) {
    OtimesInstance inst(g, GraphFamily({h}), EdgeAssignment::constant(g, 0));
    return build_otimes(inst, ProductKind::direct);
}

ProductGraph lex_product(const Graph& g, const Graph& h) {
    CircInstance inst(g, GraphFamily({h}), VertexAssignment::constant(g, 0));
    return build_circ(inst, ProductKind::lexicographic);
}

int product_degree(const OtimesInstance& inst, int a, int x) {
    if (x < 0 || x >= inst.inner_order()) throw std::invalid_argument("inner vertex out of range");
    int d = 0;
    for (int b : inst.base().neighbors(a)) d += inst.member_for(make_edge(a, b)).degree(x);
    return d;
}

int product_degree(const CircInstance& inst, int a, int x) {
    const Graph& fiber = inst.fiber(a);
    if (x < 0 || x >= fiber.order()) throw std::invalid_argument("inner vertex out of range");
    int d = fiber.degree(x);
    for (int b : inst.base().neighbors(a)) d += inst.fiber(b).order();
    return d;
}

int min_degree_circ(const CircInstance& inst) {
    if (!inst.base().is_nontrivial())
        throw precondition_error("minimum-degree formula needs a base with at least 2 vertices");
    auto shared = inst.family().shared_inner_order();
    if (!shared)
        throw precondition_error("minimum-degree formula needs fibers on one vertex set");
    const Graph& g = inst.base();
    int delta = g.min_degree();
    int best_inner = -1;
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) != delta) continue;
        int dv = inst.fiber(v).min_degree();
        if (best_inner < 0 || dv < best_inner) best_inner = dv;
    }
    return delta * (*shared) + best_inner;
}

}  // namespace gprod
