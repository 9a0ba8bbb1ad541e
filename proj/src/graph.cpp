#include "gprod/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace gprod {

Graph::Graph(int order, std::vector<Edge> edges, bool allows_loops)
    : order_(order), allows_loops_(allows_loops) {
    if (order < 0) throw std::invalid_argument("graph order must be nonnegative");
    for (auto& e : edges) {
        e = make_edge(e.first, e.second);
        if (e.first < 0 || e.second >= order)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(e.first) +
                                        "-" + std::to_string(e.second));
        if (e.first == e.second && !allows_loops)
            throw std::invalid_argument("loop at vertex " + std::to_string(e.first) +
                                        " in a graph without allows_loops");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    adj_.assign(order_, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        if (u != v) adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

Graph Graph::edgeless(int n) { return Graph(n, {}); }

Graph Graph::complete(int n) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.push_back({u, v});
    return Graph(n, std::move(es));
}

Graph Graph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> es;
    for (int v = 0; v < n; ++v) es.push_back(make_edge(v, (v + 1) % n));
    return Graph(n, std::move(es));
}

Graph Graph::path(int n) {
    if (n < 1) throw std::invalid_argument("path needs at least 1 vertex");
    std::vector<Edge> es;
    for (int v = 0; v + 1 < n; ++v) es.push_back({v, v + 1});
    return Graph(n, std::move(es));
}

Graph Graph::star(int leaves) {
    if (leaves < 1) throw std::invalid_argument("star needs at least 1 leaf");
    std::vector<Edge> es;
    for (int v = 1; v <= leaves; ++v) es.push_back({0, v});
    return Graph(leaves + 1, std::move(es));
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= order_) throw std::invalid_argument("vertex out of range");
    return adj_[v];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

int Graph::min_degree() const {
    int d = order_ == 0 ? 0 : degree(0);
    for (int v = 1; v < order_; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < order_; ++v) d = std::max(d, degree(v));
    return d;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= order_ || v >= order_) return false;
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

bool Graph::loopless() const {
    for (auto [u, v] : edges_)
        if (u == v) return false;
    return true;
}

bool Graph::is_connected() const {
    if (order_ <= 1) return true;
    std::vector<char> seen(order_, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
    }
    return reached == order_;
}

bool Graph::is_bipartite() const { return components(*this).all_bipartite(); }

bool Graph::is_complete() const {
    for (int u = 0; u < order_; ++u)
        for (int v = u + 1; v < order_; ++v)
            if (!has_edge(u, v)) return false;
    return true;
}

Graph complement(const Graph& g) {
    std::vector<Edge> es;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v)) es.push_back({u, v});
    return Graph(g.order(), std::move(es));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> es = a.edges();
    for (auto [u, v] : b.edges()) es.push_back({u + a.order(), v + a.order()});
    return Graph(a.order() + b.order(), std::move(es), a.allows_loops() || b.allows_loops());
}

Graph union_on_same_vertices(const Graph& a, const Graph& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("edge union requires graphs on the same vertex set");
    std::vector<Edge> es = a.edges();
    es.insert(es.end(), b.edges().begin(), b.edges().end());
    return Graph(a.order(), std::move(es), a.allows_loops() || b.allows_loops());
}

bool ComponentDecomposition::all_bipartite() const {
    for (const auto& b : blocks)
        if (!b.bipartition) return false;
    return true;
}

ComponentDecomposition components(const Graph& g) {
    ComponentDecomposition out;
    int n = g.order();
    std::vector<int> side(n, -1);
    for (int start = 0; start < n; ++start) {
        if (side[start] != -1) continue;
        // BFS two-coloring; a conflict or a loop kills bipartiteness.
        std::vector<int> verts;
        bool bipartite = true;
        std::queue<int> q;
        side[start] = 0;
        q.push(start);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            verts.push_back(v);
            for (int w : g.neighbors(v)) {
                if (w == v) {
                    bipartite = false;
                    continue;
                }
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    q.push(w);
                } else if (side[w] == side[v]) {
                    bipartite = false;
                }
            }
        }
        std::sort(verts.begin(), verts.end());
        ComponentBlock block;
        if (bipartite) {
            std::vector<int> v1, v2;
            for (int v : verts) (side[v] == side[verts.front()] ? v1 : v2).push_back(v);
            block.bipartition = {std::move(v1), std::move(v2)};
        }
        block.vertices = std::move(verts);
        out.blocks.push_back(std::move(block));
    }
    return out;
}

Partition::Partition(int ground_size, std::vector<std::vector<int>> blocks)
    : ground_size_(ground_size) {
    if (ground_size < 0) throw std::invalid_argument("partition ground size must be nonnegative");
    std::vector<char> seen(ground_size, 0);
    int covered = 0;
    for (auto& b : blocks) {
        if (b.empty()) throw std::invalid_argument("partition block must be nonempty");
        std::sort(b.begin(), b.end());
        for (int v : b) {
            if (v < 0 || v >= ground_size)
                throw std::invalid_argument("partition element out of range");
            if (seen[v])
                throw std::invalid_argument("partition blocks overlap at " + std::to_string(v));
            seen[v] = 1;
            ++covered;
        }
    }
    if (covered != ground_size) throw std::invalid_argument("partition does not cover the ground set");
    blocks_ = std::move(blocks);
}

Partition stable_partition(const Graph& f) {
    std::vector<std::vector<int>> blocks;
    for (const auto& c : components(f).blocks) {
        if (c.bipartition) {
            if (!c.bipartition->first.empty()) blocks.push_back(c.bipartition->first);
            if (!c.bipartition->second.empty()) blocks.push_back(c.bipartition->second);
        } else {
            blocks.push_back(c.vertices);
        }
    }
    return Partition(f.order(), std::move(blocks));
}

Graph induced_subgraph(const Graph& g, std::vector<int> s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    std::vector<int> label(g.order(), -1);
    for (int i = 0; i < static_cast<int>(s.size()); ++i) {
        if (s[i] < 0 || s[i] >= g.order())
            throw std::invalid_argument("induced subgraph vertex out of range");
        label[s[i]] = i;
    }
    std::vector<Edge> es;
    for (auto [u, v] : g.edges())
        if (label[u] != -1 && label[v] != -1) es.push_back({label[u], label[v]});
    return Graph(static_cast<int>(s.size()), std::move(es), g.allows_loops());
}

namespace {

// Backtracking over images of vertex 0, 1, ... in ascending order. Degree
// pruning never skips a valid isomorphism, so the first complete map found
// is the lexicographically least one.
bool extend_mapping(const Graph& g, const Graph& h, std::vector<int>& map,
                    std::vector<char>& used, int v) {
    int n = g.order();
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
        if (used[w] || g.degree(v) != h.degree(w)) continue;
        if (g.has_edge(v, v) != h.has_edge(w, w)) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (g.has_edge(u, v) != h.has_edge(map[u], w)) ok = false;
        if (!ok) continue;
        map[v] = w;
        used[w] = 1;
        if (extend_mapping(g, h, map, used, v + 1)) return true;
        used[w] = 0;
    }
    map[v] = -1;
    return false;
}

}  // namespace

IsomorphismResult is_isomorphic(const Graph& g, const Graph& h, int guard) {
    if (g.order() > guard || h.order() > guard)
        return {IsomorphismResult::Status::refused, {}};
    if (g.order() != h.order() || g.edge_count() != h.edge_count())
        return {IsomorphismResult::Status::not_isomorphic, {}};
    auto degs = [](const Graph& x) {
        std::vector<int> d;
        for (int v = 0; v < x.order(); ++v) d.push_back(x.degree(v));
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degs(g) != degs(h)) return {IsomorphismResult::Status::not_isomorphic, {}};
    std::vector<int> map(g.order(), -1);
    std::vector<char> used(g.order(), 0);
    if (extend_mapping(g, h, map, used, 0))
        return {IsomorphismResult::Status::isomorphic, std::move(map)};
    return {IsomorphismResult::Status::not_isomorphic, {}};
}

}  // namespace gprod
