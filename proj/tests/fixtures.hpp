#pragma once

// Shared worked instances and brute-force oracles. The oracles use only the
// Graph accessors and exhaustive search, so they stay independent of the
// library's solvers.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "gprod/family.hpp"
#include "gprod/graph.hpp"

namespace oracle {

// Component count through union-find.
inline int component_count(const gprod::Graph& g) {
    std::vector<int> parent(g.order());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& [u, v] : g.edges()) parent[find(u)] = find(v);
    int count = 0;
    for (int v = 0; v < g.order(); ++v)
        if (find(v) == v) ++count;
    return count;
}

inline bool connected(const gprod::Graph& g) { return component_count(g) <= 1; }

// Exhaustive two-coloring; loops can never be colored.
inline bool bipartite(const gprod::Graph& g) {
    const int n = g.order();
    for (const auto& [u, v] : g.edges())
        if (u == v) return false;
    if (n > 20) throw std::runtime_error("bipartite oracle limit");
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        bool ok = true;
        for (const auto& [u, v] : g.edges())
            if (((mask >> u) & 1) == ((mask >> v) & 1)) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return n == 0;
}

inline int alpha(const gprod::Graph& g) {
    const int n = g.order();
    if (n > 20) throw std::runtime_error("alpha oracle limit");
    int best = 0;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        bool ok = true;
        for (const auto& [u, v] : g.edges())
            if ((mask >> u) & (mask >> v) & 1) {
                ok = false;
                break;
            }
        if (ok) best = std::max(best, __builtin_popcountl(mask));
    }
    return best;
}

inline int omega(const gprod::Graph& g) {
    const int n = g.order();
    if (n > 20) throw std::runtime_error("omega oracle limit");
    int best = 0;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            if ((mask >> u) & 1)
                for (int v = u + 1; v < n; ++v)
                    if (((mask >> v) & 1) && !g.has_edge(u, v)) {
                        ok = false;
                        break;
                    }
        if (ok) best = std::max(best, __builtin_popcountl(mask));
    }
    return best;
}

inline int gamma(const gprod::Graph& g) {
    const int n = g.order();
    if (n > 20) throw std::runtime_error("gamma oracle limit");
    int best = n;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            if ((mask >> v) & 1) continue;
            bool covered = false;
            for (int u : g.neighbors(v))
                if ((mask >> u) & 1) {
                    covered = true;
                    break;
                }
            ok = covered;
        }
        if (ok) best = std::min(best, __builtin_popcountl(mask));
    }
    return best;
}

inline int gamma_t(const gprod::Graph& g) {
    const int n = g.order();
    if (n > 20) throw std::runtime_error("gamma_t oracle limit");
    int best = n + 1;
    for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            bool covered = false;
            for (int u : g.neighbors(v))
                if (((mask >> u) & 1) && u != v) {
                    covered = true;
                    break;
                }
            ok = covered;
        }
        if (ok) best = std::min(best, __builtin_popcountl(mask));
    }
    return best;
}

inline bool colorable_rec(const gprod::Graph& g, std::vector<int>& color, int v, int k) {
    if (v == g.order()) return true;
    for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (int u : g.neighbors(v))
            if (u < v && color[u] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        color[v] = c;
        if (colorable_rec(g, color, v + 1, k)) return true;
    }
    color[v] = -1;
    return false;
}

inline int chi(const gprod::Graph& g) {
    if (g.order() == 0) return 0;
    for (int k = 1;; ++k) {
        std::vector<int> color(g.order(), -1);
        if (colorable_rec(g, color, 0, k)) return k;
    }
}

inline int kappa(const gprod::Graph& g) {
    const int n = g.order();
    if (n > 16) throw std::runtime_error("kappa oracle limit");
    if (!connected(g)) return 0;
    if (g.is_complete()) return std::max(0, n - 1);
    int best = n;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        std::vector<int> keep;
        for (int v = 0; v < n; ++v)
            if (!((mask >> v) & 1)) keep.push_back(v);
        if (keep.size() < 2) continue;
        if (!connected(gprod::induced_subgraph(g, keep)))
            best = std::min(best, __builtin_popcountl(mask));
    }
    return best;
}

inline int lambda(const gprod::Graph& g) {
    const int n = g.order();
    const auto& es = g.edges();
    const int m = static_cast<int>(es.size());
    if (m > 18) throw std::runtime_error("lambda oracle limit");
    if (!connected(g)) return 0;
    if (n <= 1) return 0;
    for (int k = 0; k <= m; ++k) {
        std::vector<int> pick(m, 0);
        std::fill(pick.begin(), pick.begin() + k, 1);
        std::sort(pick.begin(), pick.end());
        do {
            std::vector<gprod::Edge> rest;
            for (int i = 0; i < m; ++i)
                if (!pick[i]) rest.push_back(es[i]);
            if (!connected(gprod::Graph(n, rest, g.allows_loops()))) return k;
        } while (std::next_permutation(pick.begin(), pick.end()));
    }
    return m;
}

}  // namespace oracle

namespace fx {

// Members on V = {x,y,z,t} -> {0,1,2,3}.
inline gprod::Graph f_xz_yt() { return gprod::Graph(4, {{0, 2}, {1, 3}}); }
inline gprod::Graph f_xy_zt() { return gprod::Graph(4, {{0, 1}, {2, 3}}); }
inline gprod::Graph f_xt_yz() { return gprod::Graph(4, {{0, 3}, {1, 2}}); }

// Triangle base with the three perfect matchings assigned bijectively; the
// product is four disjoint triangles.
inline gprod::OtimesInstance four_c3() {
    gprod::Graph base = gprod::Graph::cycle(3);
    gprod::GraphFamily fam({f_xz_yt(), f_xy_zt(), f_xt_yz()});
    gprod::EdgeAssignment h(std::map<gprod::Edge, int>{
        {{0, 1}, 0}, {{1, 2}, 1}, {{0, 2}, 2}});
    return gprod::OtimesInstance(base, fam, h);
}

// Triangle base, two matchings, one doubled edge; the product is two
// hexagons.
inline gprod::OtimesInstance two_c6() {
    gprod::Graph base = gprod::Graph::cycle(3);
    gprod::GraphFamily fam({f_xz_yt(), f_xt_yz()});
    gprod::EdgeAssignment h(std::map<gprod::Edge, int>{
        {{0, 1}, 0}, {{1, 2}, 0}, {{0, 2}, 1}});
    return gprod::OtimesInstance(base, fam, h);
}

// K4 base; all edges carry F1 = {xz,yz,zt} except one, which carries
// F2 = {xy,xz,zt}. The product's chromatic number is 3 for any choice.
inline gprod::OtimesInstance k4_chi1(gprod::Edge special) {
    gprod::Graph base = gprod::Graph::complete(4);
    gprod::GraphFamily fam({gprod::Graph(4, {{0, 2}, {1, 2}, {2, 3}}),
                            gprod::Graph(4, {{0, 1}, {0, 2}, {2, 3}})});
    std::map<gprod::Edge, int> values;
    for (const auto& e : base.edges()) values[e] = (e == special) ? 1 : 0;
    return gprod::OtimesInstance(base, fam, gprod::EdgeAssignment(values));
}

// K4 base; F1 = {xy,yz,zt} everywhere except the edge ac, which carries
// F2 = {xz,xt,yt}. The union graph is K4 but the product is 3-chromatic.
inline gprod::OtimesInstance k4_chi2() {
    gprod::Graph base = gprod::Graph::complete(4);
    gprod::GraphFamily fam({gprod::Graph(4, {{0, 1}, {1, 2}, {2, 3}}),
                            gprod::Graph(4, {{0, 2}, {0, 3}, {1, 3}})});
    std::map<gprod::Edge, int> values;
    for (const auto& e : base.edges()) values[e] = (e == gprod::make_edge(0, 2)) ? 1 : 0;
    return gprod::OtimesInstance(base, fam, gprod::EdgeAssignment(values));
}

// Triangle base with fibers K2, K2, K2 u K1; chromatic number 6.
inline gprod::CircInstance c3_circ() {
    gprod::Graph base = gprod::Graph::cycle(3);
    gprod::GraphFamily fam({gprod::Graph::complete(2),
                            gprod::Graph(3, {{0, 1}})});
    return gprod::CircInstance(base, fam, gprod::VertexAssignment({0, 0, 1}));
}

// Five-cycle with fibers K_n, K2, and edgeless pairs; chromatic number
// n + 2 against the bound 3n.
inline gprod::CircInstance c5_circ(int n) {
    gprod::Graph base = gprod::Graph::cycle(5);
    gprod::GraphFamily fam({gprod::Graph::complete(n), gprod::Graph::complete(2),
                            gprod::Graph::edgeless(2)});
    return gprod::CircInstance(base, fam, gprod::VertexAssignment({0, 1, 2, 2, 2}));
}

// K2 base with fibers K2 and 2K1; the product is the diamond K4 - e.
inline gprod::CircInstance diamond_circ() {
    gprod::Graph base = gprod::Graph::complete(2);
    gprod::GraphFamily fam({gprod::Graph::complete(2), gprod::Graph::edgeless(2)});
    return gprod::CircInstance(base, fam, gprod::VertexAssignment({0, 1}));
}

// Three partitions of {0..3} whose block intersection graph splits {0,1}
// away from {2} and {3}.
inline std::vector<gprod::Partition> split_partitions() {
    return {gprod::Partition(4, {{0, 1}, {2}, {3}}),
            gprod::Partition(4, {{0, 1}, {3}, {2}}),
            gprod::Partition(4, {{0}, {1}, {2}, {3}})};
}

}  // namespace fx
