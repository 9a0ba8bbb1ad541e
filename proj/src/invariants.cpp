#include "gprod/invariants.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>

namespace gprod {

namespace {

void check_solver_input(const Graph& g, int guard, const char* what) {
    if (guard > 64) guard = 64;
    if (g.order() > guard)
        throw precondition_error(std::string(what) + " refused: order " +
                                 std::to_string(g.order()) + " exceeds guard " +
                                 std::to_string(guard));
    if (!g.loopless()) throw std::invalid_argument(std::string(what) + " requires a loopless graph");
}

std::vector<uint64_t> adjacency_masks(const Graph& g) {
    std::vector<uint64_t> adj(g.order(), 0);
    for (auto [u, v] : g.edges()) {
        if (u == v) continue;
        adj[u] |= uint64_t(1) << v;
        adj[v] |= uint64_t(1) << u;
    }
    return adj;
}

struct CliqueSolver {
    const std::vector<uint64_t>& adj;
    std::vector<int> best, cur;

    void expand(uint64_t cand) {
        if (!cand) {
            if (cur.size() > best.size()) best = cur;
            return;
        }
        while (cand) {
            if (cur.size() + static_cast<size_t>(std::popcount(cand)) <= best.size()) return;
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            cur.push_back(v);
            expand(cand & adj[v]);
            cur.pop_back();
        }
    }
};

}  // namespace

VertexSetResult omega_exact(const Graph& g, int guard) {
    check_solver_input(g, guard, "clique solver");
    if (g.order() == 0) return {0, {}};
    auto adj = adjacency_masks(g);
    CliqueSolver solver{adj, {}, {}};
    uint64_t all = g.order() == 64 ? ~uint64_t(0) : (uint64_t(1) << g.order()) - 1;
    solver.expand(all);
    std::sort(solver.best.begin(), solver.best.end());
    return {static_cast<int>(solver.best.size()), std::move(solver.best)};
}

VertexSetResult alpha_exact(const Graph& g, int guard) {
    check_solver_input(g, guard, "independence solver");
    return omega_exact(complement(g), guard);
}

namespace {

bool color_with(const Graph& g, int r, std::vector<int>& colors) {
    int n = g.order();
    colors.assign(n, -1);
    // Vertex v may only open color max_used+1, which kills color symmetry.
    std::function<bool(int, int)> go = [&](int v, int used) {
        if (v == n) return true;
        int limit = std::min(r - 1, used);
        for (int c = 0; c <= limit; ++c) {
            bool ok = true;
            for (int w : g.neighbors(v))
                if (w < v && colors[w] == c) ok = false;
            if (!ok) continue;
            colors[v] = c;
            if (go(v + 1, std::max(used, c + 1))) return true;
            colors[v] = -1;
        }
        return false;
    };
    return go(0, 0);
}

}  // namespace

ColoringResult chi_exact(const Graph& g, int guard) {
    check_solver_input(g, guard, "coloring solver");
    if (g.order() == 0) return {0, {}};
    if (g.edge_count() == 0) return {1, std::vector<int>(g.order(), 0)};
    std::vector<int> greedy(g.order(), -1);
    int ub = 0;
    for (int v = 0; v < g.order(); ++v) {
        std::vector<char> taken(g.order(), 0);
        for (int w : g.neighbors(v))
            if (w < v) taken[greedy[w]] = 1;
        int c = 0;
        while (taken[c]) ++c;
        greedy[v] = c;
        ub = std::max(ub, c + 1);
    }
    int lb = omega_exact(g, guard).value;
    for (int r = lb; r < ub; ++r) {
        std::vector<int> colors;
        if (color_with(g, r, colors)) return {r, std::move(colors)};
    }
    return {ub, std::move(greedy)};
}

namespace {

// Iterative deepening for (total) domination. Branches on the smallest
// undominated vertex; its dominators are tried in ascending order.
struct DominationSolver {
    int n;
    uint64_t full;
    std::vector<uint64_t> dominators;  // vertices whose choice covers v
    std::vector<uint64_t> covers;      // vertices covered by choosing v
    std::vector<int> cur, best;

    bool search(uint64_t dominated, int remaining) {
        if (dominated == full) {
            best = cur;
            return true;
        }
        if (remaining == 0) return false;
        // Every further choice covers at most maxcov new vertices.
        int maxcov = 0;
        for (int w = 0; w < n; ++w)
            maxcov = std::max(maxcov, std::popcount(covers[w] & ~dominated));
        if (static_cast<long long>(remaining) * maxcov <
            std::popcount(full & ~dominated))
            return false;
        int v = std::countr_zero(~dominated & full);
        uint64_t cand = dominators[v];
        while (cand) {
            int w = std::countr_zero(cand);
            cand &= cand - 1;
            cur.push_back(w);
            if (search(dominated | covers[w], remaining - 1)) return true;
            cur.pop_back();
        }
        return false;
    }
};

VertexSetResult min_domination(const Graph& g, bool total, int guard, const char* what) {
    check_solver_input(g, guard, what);
    int n = g.order();
    if (n == 0) return {0, {}};
    DominationSolver s;
    s.n = n;
    s.full = n == 64 ? ~uint64_t(0) : (uint64_t(1) << n) - 1;
    s.dominators.assign(n, 0);
    s.covers.assign(n, 0);
    for (int v = 0; v < n; ++v) {
        uint64_t open = 0;
        for (int w : g.neighbors(v))
            if (w != v) open |= uint64_t(1) << w;
        s.covers[v] = total ? open : (open | (uint64_t(1) << v));
    }
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
            if (s.covers[w] & (uint64_t(1) << v)) s.dominators[v] |= uint64_t(1) << w;
    if (total)
        for (int v = 0; v < n; ++v)
            if (!s.dominators[v])
                throw precondition_error("total domination needs minimum degree 1");
    for (int k = 1; k <= n; ++k) {
        s.cur.clear();
        if (s.search(0, k)) {
            std::sort(s.best.begin(), s.best.end());
            return {k, s.best};
        }
    }
    throw std::logic_error("domination search exhausted");
}

}  // namespace

VertexSetResult gamma_exact(const Graph& g, int guard) {
    return min_domination(g, false, guard, "domination solver");
}

VertexSetResult gamma_t_exact(const Graph& g, int guard) {
    return min_domination(g, true, guard, "total domination solver");
}

int alpha_otimes_lower(const OtimesInstance& inst, int guard) {
    int a_base = alpha_exact(inst.base(), guard).value;
    int a_union = alpha_exact(union_graph(inst), guard).value;
    return std::max(a_base * inst.inner_order(), a_union * inst.base().order());
}

AlphaCircResult alpha_circ(const CircInstance& inst, int guard) {
    const Graph& g = inst.base();
    if (g.order() > std::min(guard, 64))
        throw precondition_error("weighted independence refused: base exceeds guard");
    if (!g.loopless()) throw std::invalid_argument("weighted independence requires a loopless base");
    AlphaCircResult out;
    std::vector<int> w(g.order());
    for (int v = 0; v < g.order(); ++v) w[v] = alpha_exact(inst.fiber(v), guard).value;
    if (g.order() == 1) {
        out.value = w[0];
        out.base_set = {0};
        out.hypothesis_met = false;
        return out;
    }
    auto adj = adjacency_masks(g);
    std::vector<int> suffix(g.order() + 1, 0);
    for (int v = g.order() - 1; v >= 0; --v) suffix[v] = suffix[v + 1] + w[v];
    std::vector<int> cur;
    int best = -1;
    std::vector<int> best_set;
    std::function<void(int, int, uint64_t)> go = [&](int v, int acc, uint64_t blocked) {
        if (v == g.order()) {
            if (acc > best) {
                best = acc;
                best_set = cur;
            }
            return;
        }
        if (acc + suffix[v] <= best) return;
        if (!(blocked & (uint64_t(1) << v))) {
            cur.push_back(v);
            go(v + 1, acc + w[v], blocked | adj[v]);
            cur.pop_back();
        }
        go(v + 1, acc, blocked);
    };
    go(0, 0, 0);
    out.value = best;
    out.base_set = std::move(best_set);
    return out;
}

GammaOtimesLower gamma_otimes_lower(const OtimesInstance& inst, int guard) {
    GammaOtimesLower out;
    int g_base = gamma_exact(inst.base(), guard).value;
    int best_local = -1;
    for (int a = 0; a < inst.base().order(); ++a) {
        int ga = gamma_exact(local_union(inst, a), guard).value;
        if (best_local < 0 || ga < best_local) best_local = ga;
    }
    out.bound = g_base + best_local - 1;
    out.union_bound = g_base + gamma_exact(union_graph(inst), guard).value - 1;
    return out;
}

int gamma_otimes_upper(const OtimesInstance& inst, const Graph& f, int guard) {
    if (f.order() != inst.inner_order())
        throw std::invalid_argument("common subgraph must live on the shared vertex set");
    for (auto e : inst.base().edges())
        for (auto fe : f.edges())
            if (!inst.member_for(e).has_edge(fe.first, fe.second))
                throw std::invalid_argument(
                    "common subgraph edge " + std::to_string(fe.first) + "-" +
                    std::to_string(fe.second) + " missing from the member on edge " +
                    std::to_string(e.first) + "-" + std::to_string(e.second));
    return 3 * gamma_exact(inst.base(), guard).value * gamma_exact(f, guard).value;
}

namespace {

bool dominates(const Graph& g, const std::vector<int>& d, bool total) {
    std::vector<char> in(g.order(), 0), dom(g.order(), 0);
    for (int v : d) {
        if (v < 0 || v >= g.order()) throw std::invalid_argument("dominating set vertex out of range");
        in[v] = 1;
    }
    for (int v : d)
        for (int w : g.neighbors(v))
            if (w != v) dom[w] = 1;
    for (int v = 0; v < g.order(); ++v) {
        if (!dom[v] && !(in[v] && !total)) return false;
    }
    return true;
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
    std::set<int> sb(b.begin(), b.end());
    for (int x : a)
        if (!sb.count(x)) return false;
    return true;
}

}  // namespace

std::vector<int> dominating_set_construct(
    const OtimesInstance& inst, const std::vector<int>& base_total_dominating,
    const std::map<Edge, std::vector<int>>& edge_total_dominating,
    const std::vector<int>& base_dominating_subset,
    const std::map<Edge, std::vector<int>>& edge_dominating_subsets) {
    const Graph& g = inst.base();
    if (!dominates(g, base_total_dominating, true))
        throw std::invalid_argument("base_total_dominating is not a total dominating set of the base");
    if (!subset_of(base_dominating_subset, base_total_dominating))
        throw std::invalid_argument("base_dominating_subset is not a subset of base_total_dominating");
    if (!dominates(g, base_dominating_subset, false))
        throw std::invalid_argument("base_dominating_subset is not a dominating set of the base");
    std::set<int> d_union, b_union;
    for (auto e : g.edges()) {
        auto dit = edge_total_dominating.find(e);
        auto bit_ = edge_dominating_subsets.find(e);
        std::string tag = std::to_string(e.first) + "-" + std::to_string(e.second);
        if (dit == edge_total_dominating.end())
            throw std::invalid_argument("edge_total_dominating misses edge " + tag);
        if (bit_ == edge_dominating_subsets.end())
            throw std::invalid_argument("edge_dominating_subsets misses edge " + tag);
        const Graph& m = inst.member_for(e);
        if (!dominates(m, dit->second, true))
            throw std::invalid_argument("edge_total_dominating[" + tag +
                                        "] is not a total dominating set of its member");
        if (!subset_of(bit_->second, dit->second))
            throw std::invalid_argument("edge_dominating_subsets[" + tag +
                                        "] is not a subset of edge_total_dominating[" + tag + "]");
        if (!dominates(m, bit_->second, false))
            throw std::invalid_argument("edge_dominating_subsets[" + tag +
                                        "] is not a dominating set of its member");
        d_union.insert(dit->second.begin(), dit->second.end());
        b_union.insert(bit_->second.begin(), bit_->second.end());
    }
    int inner = inst.inner_order();
    std::set<int> x;
    for (int a : base_dominating_subset)
        for (int v : d_union) x.insert(a * inner + v);
    for (int a : base_total_dominating)
        for (int v : b_union) x.insert(a * inner + v);
    return std::vector<int>(x.begin(), x.end());
}

GammaCircUpper gamma_circ_upper(const CircInstance& inst, int guard) {
    const Graph& g = inst.base();
    if (g.order() > std::min(guard, 30))
        throw precondition_error("dominating-set enumeration refused: base exceeds guard");
    std::vector<int> w(g.order());
    for (int v = 0; v < g.order(); ++v) w[v] = gamma_exact(inst.fiber(v), guard).value;
    GammaCircUpper out;
    int best = -1;
    std::vector<int> best_set;
    // Sizes increase, and every fiber cost is at least one for nonempty
    // fibers, so stop once the size alone cannot beat the incumbent.
    for (int k = 1; k <= g.order(); ++k) {
        if (best >= 0 && k >= best) break;
        std::vector<int> idx(k);
        std::function<void(int, int)> combos = [&](int pos, int from) {
            if (pos == k) {
                std::vector<int> d(idx.begin(), idx.end());
                if (!dominates(g, d, false)) return;
                int cost = 0;
                for (int v : d) cost += w[v];
                if (best < 0 || cost < best) {
                    best = cost;
                    best_set = d;
                }
                return;
            }
            for (int v = from; v < g.order(); ++v) {
                idx[pos] = v;
                combos(pos + 1, v + 1);
            }
        };
        combos(0, 0);
    }
    if (best < 0) throw std::logic_error("no dominating set found");
    out.value = best;
    out.base_set = std::move(best_set);
    return out;
}

ChiOmegaBounds chi_omega_otimes_bounds(const OtimesInstance& inst, int guard) {
    Graph un = union_graph(inst);
    ChiOmegaBounds out;
    out.chi_bound = std::min(chi_exact(inst.base(), guard).value, chi_exact(un, guard).value);
    out.omega_bound = std::min(omega_exact(inst.base(), guard).value,
                               omega_exact(un, guard).value);
    return out;
}

CliqueAssignment clique_realizing_assignment(const Graph& base, const GraphFamily& family,
                                             int guard) {
    Graph sigma = sigma_gamma(family);
    auto base_clique = omega_exact(base, guard);
    auto inner_clique = omega_exact(sigma, guard);
    int k = std::min(base_clique.value, inner_clique.value);
    CliqueAssignment out;
    out.clique_size = k;
    out.base_clique.assign(base_clique.witness.begin(), base_clique.witness.begin() + k);
    out.inner_clique.assign(inner_clique.witness.begin(), inner_clique.witness.begin() + k);
    std::map<Edge, int> values;
    for (auto e : base.edges()) values[e] = 0;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            Edge inner_edge = make_edge(out.inner_clique[i], out.inner_clique[j]);
            int member = -1;
            for (int mi = 0; mi < family.size(); ++mi)
                if (family.member(mi).has_edge(inner_edge.first, inner_edge.second)) {
                    member = mi;
                    break;
                }
            values[make_edge(out.base_clique[i], out.base_clique[j])] = member;
        }
    out.assignment = EdgeAssignment(std::move(values));
    return out;
}

int chi_circ_upper(const CircInstance& inst, int guard) {
    int worst = 0;
    for (int v = 0; v < inst.base().order(); ++v)
        worst = std::max(worst, chi_exact(inst.fiber(v), guard).value);
    return chi_exact(inst.base(), guard).value * worst;
}

CircInstance reduce_to_complete_fibers(const CircInstance& inst, int guard) {
    std::vector<int> need(inst.base().order());
    std::set<int> orders;
    for (int v = 0; v < inst.base().order(); ++v) {
        need[v] = chi_exact(inst.fiber(v), guard).value;
        orders.insert(need[v]);
    }
    std::vector<Graph> members;
    std::map<int, int> index_of;
    for (int m : orders) {
        index_of[m] = static_cast<int>(members.size());
        members.push_back(Graph::complete(m));
    }
    std::vector<int> values(inst.base().order());
    for (int v = 0; v < inst.base().order(); ++v) values[v] = index_of[need[v]];
    return CircInstance(inst.base(), GraphFamily(std::move(members)),
                        VertexAssignment(std::move(values)));
}

Graph kneser_graph(const std::vector<int>& demands, int s) {
    if (demands.empty()) throw std::invalid_argument("need at least one demand");
    for (int d : demands)
        if (d < 1) throw std::invalid_argument("demands must be positive");
    if (s < 1 || s > 24) throw std::invalid_argument("palette size out of range");
    std::set<int> distinct(demands.begin(), demands.end());
    // Increasing bitmask order on fixed popcount is colexicographic order.
    std::vector<uint32_t> masks;
    for (int r : distinct)
        for (uint32_t m = 0; m < (uint32_t(1) << s); ++m)
            if (std::popcount(m) == r) masks.push_back(m);
    std::vector<Edge> es;
    int n = static_cast<int>(masks.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((masks[i] & masks[j]) == 0) es.push_back({i, j});
    return Graph(n, std::move(es));
}

TupleColoringResult h_tuple_chromatic(const Graph& g, const std::vector<int>& demands,
                                      int guard) {
    check_solver_input(g, guard, "tuple coloring solver");
    if (static_cast<int>(demands.size()) != g.order())
        throw std::invalid_argument("one demand per vertex required");
    for (int d : demands)
        if (d < 1) throw std::invalid_argument("demands must be positive");
    if (g.order() == 0) return {0, {}};
    int lb = *std::max_element(demands.begin(), demands.end());
    for (auto [u, v] : g.edges()) lb = std::max(lb, demands[u] + demands[v]);
    int total = std::accumulate(demands.begin(), demands.end(), 0);
    for (int s = lb; s <= std::min(total, 62); ++s) {
        std::vector<uint64_t> chosen(g.order(), 0);
        std::function<bool(int)> go = [&](int v) -> bool {
            if (v == g.order()) return true;
            uint64_t forbidden = 0;
            for (int w : g.neighbors(v))
                if (w < v) forbidden |= chosen[w];
            // Enumerate demand-sized submasks of the palette in colex order.
            uint64_t palette = (uint64_t(1) << s) - 1;
            for (uint64_t m = (uint64_t(1) << demands[v]) - 1; m <= palette;) {
                if ((m & forbidden) == 0) {
                    chosen[v] = m;
                    if (go(v + 1)) return true;
                    chosen[v] = 0;
                }
                // Gosper's hack: next mask with the same popcount.
                uint64_t c = m & -m, r = m + c;
                m = (((r ^ m) >> 2) / c) | r;
                if (std::popcount(m) != demands[v]) break;
            }
            return false;
        };
        if (go(0)) {
            TupleColoringResult out;
            out.value = s;
            out.sets.assign(g.order(), {});
            for (int v = 0; v < g.order(); ++v)
                for (int c = 0; c < s; ++c)
                    if (chosen[v] & (uint64_t(1) << c)) out.sets[v].push_back(c);
            return out;
        }
    }
    throw std::logic_error("tuple coloring search exhausted");
}

}  // namespace gprod
