#include "gprod/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>

namespace gprod {

ConnectivityVerdict bfs_connectivity(const Graph& g) {
    auto comp = components(g);
    ConnectivityVerdict v;
    v.component_count = comp.count();
    v.connected = comp.count() <= 1;
    v.method = "bfs";
    if (!v.connected) v.witness = comp.blocks.front().vertices;
    return v;
}

SetFamily fiber_sets(const OtimesInstance& inst) {
    const Graph& g = inst.base();
    int inner = inst.inner_order();
    SetFamily fam;
    fam.ground_size = g.order() * inner;
    auto id = [inner](int a, int x) { return a * inner + x; };
    for (int a = 0; a < g.order(); ++a) {
        for (int b : g.neighbors(a)) {
            auto comp = components(inst.member_for(make_edge(a, b)));
            for (int ci = 0; ci < comp.count(); ++ci) {
                const auto& c = comp.blocks[ci];
                LabeledSet s;
                s.base_edge = make_edge(a, b);
                s.component_index = ci;
                s.endpoint = a;
                if (c.bipartition) {
                    for (int x : c.bipartition->first) s.vertices.push_back(id(a, x));
                    for (int y : c.bipartition->second) s.vertices.push_back(id(b, y));
                } else {
                    for (int x : c.vertices) {
                        s.vertices.push_back(id(a, x));
                        if (a != b) s.vertices.push_back(id(b, x));
                    }
                }
                std::sort(s.vertices.begin(), s.vertices.end());
                s.vertices.erase(std::unique(s.vertices.begin(), s.vertices.end()),
                                 s.vertices.end());
                fam.sets.push_back(std::move(s));
            }
        }
    }
    return fam;
}

Graph intersection_graph(const std::vector<std::vector<int>>& sets) {
    int n = static_cast<int>(sets.size());
    auto intersect = [](const std::vector<int>& a, const std::vector<int>& b) {
        size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j]) return true;
            if (a[i] < b[j]) ++i; else ++j;
        }
        return false;
    };
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (intersect(sets[i], sets[j])) es.push_back({i, j});
    return Graph(n, std::move(es));
}

Graph intersection_graph(const SetFamily& fam) {
    std::vector<std::vector<int>> sets;
    sets.reserve(fam.sets.size());
    for (const auto& s : fam.sets) sets.push_back(s.vertices);
    return intersection_graph(sets);
}

ConnectivityVerdict predict_otimes_connectivity(const OtimesInstance& inst) {
    const Graph& g = inst.base();
    if (!g.is_nontrivial() || !g.is_connected())
        throw precondition_error("connectivity criterion needs a connected nontrivial base");
    if (inst.inner_order() < 2)
        throw precondition_error("connectivity criterion needs nontrivial members");
    for (auto e : g.edges())
        if (!inst.member_for(e).is_connected())
            throw precondition_error("connectivity criterion needs connected members");

    Graph un = union_graph(inst);
    ConnectivityVerdict v;
    v.method = "bipartite-criterion";
    if (!g.is_bipartite() || !un.is_bipartite()) return v;

    // Both bipartite: exactly two components, split by side parity.
    v.connected = false;
    v.component_count = 2;
    auto gsides = *components(g).blocks.front().bipartition;
    auto usides = *components(un).blocks.front().bipartition;
    int inner = inst.inner_order();
    for (int a : gsides.first)
        for (int x : usides.first) v.witness.push_back(a * inner + x);
    for (int b : gsides.second)
        for (int y : usides.second) v.witness.push_back(b * inner + y);
    std::sort(v.witness.begin(), v.witness.end());
    return v;
}

ConnectivityVerdict otimes_connected_via_family(const OtimesInstance& inst) {
    const Graph& g = inst.base();
    if (!g.is_nontrivial() || !g.is_connected())
        throw precondition_error("fiber-set characterization needs a connected nontrivial base");
    auto fam = fiber_sets(inst);
    auto comp = components(intersection_graph(fam));
    ConnectivityVerdict v;
    v.method = "fiber-family";
    v.component_count = comp.count();
    v.connected = comp.count() <= 1;
    if (!v.connected) {
        std::set<int> uni;
        for (int si : comp.blocks.front().vertices)
            uni.insert(fam.sets[si].vertices.begin(), fam.sets[si].vertices.end());
        v.witness.assign(uni.begin(), uni.end());
    }
    return v;
}

std::optional<SufficiencyCertificate> sufficient_connectivity_check(const OtimesInstance& inst) {
    const Graph& g = inst.base();
    if (!g.is_nontrivial() || !g.is_connected())
        throw precondition_error("sufficient conditions need a connected nontrivial base");
    for (auto e : g.edges())
        if (inst.member_for(e).min_degree() < 1)
            throw precondition_error("sufficient conditions need members without isolated vertices");

    for (auto e : g.edges()) {
        const Graph& m = inst.member_for(e);
        if (m.is_connected() && !m.is_bipartite()) {
            SufficiencyCertificate c;
            c.kind = SufficiencyCertificate::Kind::one_edge;
            c.e1 = e;
            return c;
        }
    }
    auto meets_both = [](const std::vector<int>& s, const std::vector<int>& v1,
                         const std::vector<int>& v2) {
        auto meets = [](const std::vector<int>& a, const std::vector<int>& b) {
            size_t i = 0, j = 0;
            while (i < a.size() && j < b.size()) {
                if (a[i] == b[j]) return true;
                if (a[i] < b[j]) ++i; else ++j;
            }
            return false;
        };
        return meets(s, v1) && meets(s, v2);
    };
    for (int b = 0; b < g.order(); ++b) {
        for (int a : g.neighbors(b)) {
            if (a == b) continue;
            const Graph& mab = inst.member_for(make_edge(a, b));
            if (!mab.is_connected() || !mab.is_bipartite()) continue;
            auto sides = *components(mab).blocks.front().bipartition;
            for (int c = 0; c < g.order(); ++c) {
                if (c == b || c == a || !g.has_edge(b, c)) continue;
                auto comp = components(inst.member_for(make_edge(b, c)));
                for (int ci = 0; ci < comp.count(); ++ci) {
                    const auto& cb = comp.blocks[ci];
                    SufficiencyCertificate cert;
                    cert.e1 = make_edge(a, b);
                    cert.e2 = make_edge(b, c);
                    cert.shared_vertex = b;
                    cert.component_index = ci;
                    if (!cb.bipartition) {
                        if (meets_both(cb.vertices, sides.first, sides.second)) {
                            cert.kind = SufficiencyCertificate::Kind::two_edge_nonbip;
                            return cert;
                        }
                    } else {
                        if (meets_both(cb.bipartition->first, sides.first, sides.second)) {
                            cert.kind = SufficiencyCertificate::Kind::two_edge_bipartite;
                            cert.side = 0;
                            return cert;
                        }
                        if (meets_both(cb.bipartition->second, sides.first, sides.second)) {
                            cert.kind = SufficiencyCertificate::Kind::two_edge_bipartite;
                            cert.side = 1;
                            return cert;
                        }
                    }
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<PartitionWitness> partition_disconnection_witness(
    const std::vector<Partition>& parts) {
    if (parts.empty()) throw std::invalid_argument("need at least one partition");
    int ground = parts.front().ground_size();
    for (const auto& p : parts)
        if (p.ground_size() != ground)
            throw std::invalid_argument("partitions must share a ground set");

    std::vector<std::vector<int>> all_blocks;
    std::vector<int> owner;
    for (int i = 0; i < static_cast<int>(parts.size()); ++i)
        for (const auto& b : parts[i].blocks()) {
            all_blocks.push_back(b);
            owner.push_back(i);
        }
    auto comp = components(intersection_graph(all_blocks));
    if (comp.count() <= 1) return std::nullopt;

    // Any single intersection component yields subfamilies with equal unions;
    // the union is proper because the component is.
    PartitionWitness w;
    w.subfamilies.assign(parts.size(), {});
    std::set<int> uni;
    for (int bi : comp.blocks.front().vertices) {
        w.subfamilies[owner[bi]].push_back(all_blocks[bi]);
        uni.insert(all_blocks[bi].begin(), all_blocks[bi].end());
    }
    w.common_union.assign(uni.begin(), uni.end());
    return w;
}

std::optional<PartitionWitness> predict_disconnection_via_partitions(const OtimesInstance& inst) {
    const Graph& g = inst.base();
    if (!g.is_nontrivial() || !g.is_connected())
        throw precondition_error("partition criterion needs a connected nontrivial base");

    bool all_nonbip_components = true;
    for (auto e : g.edges())
        for (const auto& c : components(inst.member_for(e)).blocks)
            if (c.bipartition) all_nonbip_components = false;
    if (all_nonbip_components) {
        std::vector<Partition> parts;
        for (auto e : g.edges()) parts.push_back(stable_partition(inst.member_for(e)));
        return partition_disconnection_witness(parts);
    }

    bool star = g.loopless() && g.edge_count() == g.order() - 1 &&
                g.max_degree() == g.order() - 1;
    if (star) {
        std::vector<char> used(inst.family().size(), 0);
        for (auto e : g.edges()) used[inst.assignment().at(e)] = 1;
        bool surjective = std::all_of(used.begin(), used.end(), [](char c) { return c != 0; });
        bool no_isolated = true;
        for (const auto& m : inst.family().members())
            if (m.min_degree() < 1) no_isolated = false;
        if (surjective && no_isolated) {
            std::vector<Partition> parts;
            for (const auto& m : inst.family().members()) parts.push_back(stable_partition(m));
            return partition_disconnection_witness(parts);
        }
    }
    throw precondition_error(
        "partition criterion needs all member components nonbipartite, or a star base with a "
        "surjective assignment and members without isolated vertices");
}

// -------------------- minimum cuts --------------------

namespace {

struct FlowNet {
    struct Arc { int to; int cap; };
    std::vector<Arc> arcs;                  // arc i and i^1 are a residual pair
    std::vector<std::vector<int>> out;
    explicit FlowNet(int n) : out(n) {}

    void add(int u, int v, int cap) {
        out[u].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({v, cap});
        out[v].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({u, 0});
    }

    int maxflow(int s, int t) {
        int total = 0;
        for (;;) {
            std::vector<int> via(out.size(), -1);
            std::queue<int> q;
            q.push(s);
            via[s] = -2;
            while (!q.empty() && via[t] == -1) {
                int v = q.front();
                q.pop();
                for (int ai : out[v]) {
                    if (arcs[ai].cap <= 0 || via[arcs[ai].to] != -1) continue;
                    via[arcs[ai].to] = ai;
                    q.push(arcs[ai].to);
                }
            }
            if (via[t] == -1) return total;
            int aug = std::numeric_limits<int>::max();
            for (int v = t; v != s;) {
                aug = std::min(aug, arcs[via[v]].cap);
                v = arcs[via[v] ^ 1].to;
            }
            for (int v = t; v != s;) {
                arcs[via[v]].cap -= aug;
                arcs[via[v] ^ 1].cap += aug;
                v = arcs[via[v] ^ 1].to;
            }
            total += aug;
        }
    }

    std::vector<char> reachable(int s) const {
        std::vector<char> seen(out.size(), 0);
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int ai : out[v])
                if (arcs[ai].cap > 0 && !seen[arcs[ai].to]) {
                    seen[arcs[ai].to] = 1;
                    q.push(arcs[ai].to);
                }
        }
        return seen;
    }
};

bool connected_without_vertices(const Graph& g, const std::vector<char>& removed) {
    int n = g.order();
    int start = -1, alive = 0;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) {
            if (start == -1) start = v;
            ++alive;
        }
    if (alive <= 1) return true;
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(start);
    seen[start] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v))
            if (w != v && !removed[w] && !seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
    }
    return reached == alive;
}

bool connected_without_edges(const Graph& g, const std::vector<char>& removed_edge) {
    int n = g.order();
    if (n <= 1) return true;
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge index)
    for (int ei = 0; ei < g.edge_count(); ++ei) {
        auto [u, v] = g.edges()[ei];
        if (u == v) continue;
        adj[u].push_back({v, ei});
        adj[v].push_back({u, ei});
    }
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (auto [w, ei] : adj[v])
            if (!removed_edge[ei] && !seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
    }
    return reached == n;
}

// Lexicographic combinations of {0..n-1} of the given size; f returns true to stop.
template <typename F>
bool for_each_combination(int n, int size, F f) {
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    if (size > n) return false;
    for (;;) {
        if (f(idx)) return true;
        int i = size - 1;
        while (i >= 0 && idx[i] == n - size + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Split network: vertex v becomes 2v (in) and 2v+1 (out).
FlowNet vertex_split_net(const Graph& g, int s, int t) {
    int n = g.order();
    int inf = 2 * n + 5;
    FlowNet net(2 * n);
    for (int v = 0; v < n; ++v) net.add(2 * v, 2 * v + 1, (v == s || v == t) ? inf : 1);
    for (auto [u, v] : g.edges()) {
        if (u == v) continue;
        net.add(2 * u + 1, 2 * v, inf);
        net.add(2 * v + 1, 2 * u, inf);
    }
    return net;
}

VertexCut kappa_by_flow(const Graph& g) {
    int n = g.order();
    // Candidate pairs: 0 against its non-neighbors, plus non-adjacent pairs
    // of neighbors of 0. Every minimum cut separates one such pair.
    std::vector<std::pair<int, int>> pairs;
    for (int t = 1; t < n; ++t)
        if (!g.has_edge(0, t)) pairs.push_back({0, t});
    const auto& nb = g.neighbors(0);
    for (size_t i = 0; i < nb.size(); ++i)
        for (size_t j = i + 1; j < nb.size(); ++j)
            if (nb[i] != 0 && nb[j] != 0 && !g.has_edge(nb[i], nb[j]))
                pairs.push_back({nb[i], nb[j]});
    int best = -1;
    std::pair<int, int> best_pair{-1, -1};
    for (auto [s, t] : pairs) {
        FlowNet net = vertex_split_net(g, s, t);
        int f = net.maxflow(2 * s + 1, 2 * t);
        if (best < 0 || f < best) {
            best = f;
            best_pair = {s, t};
        }
    }
    FlowNet net = vertex_split_net(g, best_pair.first, best_pair.second);
    net.maxflow(2 * best_pair.first + 1, 2 * best_pair.second);
    auto seen = net.reachable(2 * best_pair.first + 1);
    VertexCut cut;
    cut.value = best;
    for (int v = 0; v < n; ++v)
        if (v != best_pair.first && v != best_pair.second && seen[2 * v] && !seen[2 * v + 1])
            cut.vertices.push_back(v);
    return cut;
}

}  // namespace

VertexCut kappa_exact(const Graph& g, int enum_guard) {
    int n = g.order();
    if (n <= 1) return {0, {}};
    if (!g.is_connected()) return {0, {}};
    if (g.is_complete()) {
        VertexCut cut;
        cut.value = n - 1;
        for (int v = 0; v + 1 < n; ++v) cut.vertices.push_back(v);
        return cut;
    }
    if (n <= enum_guard) {
        for (int k = 1; k <= n - 2; ++k) {
            VertexCut found;
            bool hit = for_each_combination(n, k, [&](const std::vector<int>& idx) {
                std::vector<char> removed(n, 0);
                for (int i : idx) removed[i] = 1;
                if (!connected_without_vertices(g, removed)) {
                    found = {k, idx};
                    return true;
                }
                return false;
            });
            if (hit) return found;
        }
        throw std::logic_error("no separating set in a non-complete graph");
    }
    return kappa_by_flow(g);
}

EdgeCut lambda_exact(const Graph& g, int enum_edge_guard) {
    int n = g.order();
    if (n <= 1) return {0, {}};
    if (!g.is_connected()) return {0, {}};
    int m = g.edge_count();
    if (m <= enum_edge_guard) {
        for (int k = 1; k <= m; ++k) {
            EdgeCut found;
            bool hit = for_each_combination(m, k, [&](const std::vector<int>& idx) {
                std::vector<char> removed(m, 0);
                for (int i : idx) removed[i] = 1;
                if (!connected_without_edges(g, removed)) {
                    found.value = k;
                    for (int i : idx) found.edges.push_back(g.edges()[i]);
                    return true;
                }
                return false;
            });
            if (hit) return found;
        }
        throw std::logic_error("no disconnecting edge set in a connected nontrivial graph");
    }
    auto build = [&g, n]() {
        FlowNet net(n);
        for (auto [u, v] : g.edges()) {
            if (u == v) continue;
            net.add(u, v, 1);
            net.add(v, u, 1);
        }
        return net;
    };
    int best = -1, best_t = -1;
    for (int t = 1; t < n; ++t) {
        FlowNet net = build();
        int f = net.maxflow(0, t);
        if (best < 0 || f < best) {
            best = f;
            best_t = t;
        }
    }
    FlowNet net = build();
    net.maxflow(0, best_t);
    auto seen = net.reachable(0);
    EdgeCut cut;
    cut.value = best;
    for (auto [u, v] : g.edges())
        if (u != v && seen[u] != seen[v]) cut.edges.push_back({u, v});
    return cut;
}

int kappa_circ(const CircInstance& inst) {
    const Graph& g = inst.base();
    if (!g.is_connected())
        throw precondition_error("vertex-connectivity formula needs a connected base");
    auto shared = inst.family().shared_inner_order();
    if (!shared)
        throw precondition_error("vertex-connectivity formula needs fibers on one vertex set");
    if (g.is_complete()) {
        int best = -1;
        for (int v = 0; v < g.order(); ++v) {
            int kv = kappa_exact(inst.fiber(v)).value;
            if (best < 0 || kv < best) best = kv;
        }
        return (g.order() - 1) * (*shared) + best;
    }
    return kappa_exact(g).value * (*shared);
}

int lambda_circ(const CircInstance& inst) {
    const Graph& g = inst.base();
    if (!g.is_nontrivial() || !g.is_connected())
        throw precondition_error("edge-connectivity formula needs a connected nontrivial base");
    auto shared = inst.family().shared_inner_order();
    if (!shared)
        throw precondition_error("edge-connectivity formula needs fibers on one vertex set");
    if (*shared < 2)
        throw precondition_error("edge-connectivity formula needs nontrivial fibers");
    int v = *shared;
    return std::min(lambda_exact(g).value * v * v, min_degree_circ(inst));
}

}  // namespace gprod
