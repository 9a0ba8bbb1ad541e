#include "gprod/structure.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace gprod {

std::vector<int> Decomposition::reconstruction() const {
    std::vector<int> out;
    for (const auto& phi : bijections) out.insert(out.end(), phi.begin(), phi.end());
    return out;
}

Graph reconstructed_graph(const Decomposition& d) {
    ProductGraph p = otimes_h(d.instance());
    std::vector<int> back = d.reconstruction();
    std::vector<Edge> es;
    bool loops = false;
    for (auto [u, v] : p.graph().edges()) {
        Edge e = make_edge(back[u], back[v]);
        loops = loops || e.first == e.second;
        es.push_back(e);
    }
    return Graph(p.order(), std::move(es), loops);
}

namespace {

DecompositionCheckResult fail(std::string reason) {
    DecompositionCheckResult r;
    r.reason = std::move(reason);
    return r;
}

DecompositionCheckResult fail_at(std::string reason, int i, int j, int u, int v) {
    DecompositionCheckResult r;
    r.reason = std::move(reason);
    r.violation = ConditionViolation{i, j, u, v};
    return r;
}

}  // namespace

DecompositionCheckResult check_decomposition(const Graph& g,
                                             const std::vector<std::vector<int>>& blocks,
                                             const std::vector<std::vector<int>>& bijections,
                                             bool loop_mode) {
    if (!g.loopless()) return fail("graph to factor must be loopless");
    int k = static_cast<int>(blocks.size());
    if (k < 1) return fail("need at least one block");
    if (static_cast<int>(bijections.size()) != k) return fail("one bijection per block required");
    size_t q = blocks[0].size();
    if (q < 1) return fail("blocks must be nonempty");
    std::vector<char> seen(g.order(), 0);
    for (int i = 0; i < k; ++i) {
        if (blocks[i].size() != q) return fail("blocks must have equal sizes");
        for (size_t s = 0; s < q; ++s) {
            int v = blocks[i][s];
            if (v < 0 || v >= g.order()) return fail("block vertex out of range");
            if (s > 0 && blocks[i][s - 1] >= v) return fail("block contents must be ascending");
            seen[v] = 1;
        }
    }
    if (static_cast<size_t>(g.order()) != q * k ||
        std::count(seen.begin(), seen.end(), 1) != g.order())
        return fail("blocks must partition the vertex set");
    for (int i = 0; i < k; ++i) {
        if (bijections[i].size() != q) return fail("bijections must have one image per position");
        std::vector<int> sorted = bijections[i];
        std::sort(sorted.begin(), sorted.end());
        if (sorted != blocks[i]) return fail("bijection " + std::to_string(i) +
                                             " is not onto its block");
    }
    if (!loop_mode) {
        for (int i = 0; i < k; ++i)
            for (size_t s = 0; s < q; ++s)
                for (size_t t = s + 1; t < q; ++t)
                    if (g.has_edge(blocks[i][s], blocks[i][t]))
                        return fail_at("block " + std::to_string(i) + " is not independent", i,
                                       i, static_cast<int>(s), static_cast<int>(t));
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                for (size_t s = 0; s < q; ++s)
                    if (g.has_edge(bijections[i][s], bijections[j][s]))
                        return fail_at("same-position pair across blocks " + std::to_string(i) +
                                           " and " + std::to_string(j) + " is an edge",
                                       i, j, static_cast<int>(s), static_cast<int>(s));
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            for (size_t s = 0; s < q; ++s)
                for (size_t t = s + 1; t < q; ++t)
                    if (g.has_edge(bijections[i][s], bijections[j][t]) !=
                        g.has_edge(bijections[i][t], bijections[j][s]))
                        return fail_at("cross pairs between blocks " + std::to_string(i) +
                                           " and " + std::to_string(j) + " disagree",
                                       i, j, static_cast<int>(s), static_cast<int>(t));
    DecompositionCheckResult ok;
    ok.ok = true;
    return ok;
}

Decomposition build_decomposition(const Graph& g,
                                  const std::vector<std::vector<int>>& blocks,
                                  const std::vector<std::vector<int>>& bijections,
                                  bool loop_mode) {
    auto verdict = check_decomposition(g, blocks, bijections, loop_mode);
    if (!verdict.ok) throw std::invalid_argument("invalid factorization witness: " + verdict.reason);
    int k = static_cast<int>(blocks.size());
    int q = static_cast<int>(blocks[0].size());

    std::vector<Edge> base_edges;
    bool base_loops = false;
    for (int i = 0; i < k; ++i) {
        for (int s = 0; s < q && loop_mode; ++s)
            for (int t = s + 1; t < q; ++t)
                if (g.has_edge(blocks[i][s], blocks[i][t])) {
                    base_edges.push_back({i, i});
                    base_loops = true;
                    s = q;
                    break;
                }
        for (int j = i + 1; j < k; ++j) {
            bool any = false;
            for (int s = 0; s < q && !any; ++s)
                for (int t = 0; t < q; ++t)
                    if (g.has_edge(blocks[i][s], blocks[j][t])) {
                        any = true;
                        break;
                    }
            if (any) base_edges.push_back({i, j});
        }
    }
    Graph base(k, std::move(base_edges), base_loops);

    std::vector<Graph> members;
    std::map<Edge, int> values;
    for (auto [i, j] : base.edges()) {
        std::vector<Edge> fe;
        for (int s = 0; s < q; ++s) {
            if (i == j) {
                for (int t = s + 1; t < q; ++t)
                    if (g.has_edge(bijections[i][s], bijections[i][t])) fe.push_back({s, t});
            } else {
                for (int t = 0; t < q; ++t)
                    if (g.has_edge(bijections[i][s], bijections[j][t]))
                        fe.push_back(make_edge(s, t));
            }
        }
        Graph f(q, std::move(fe), loop_mode);
        int idx = -1;
        for (size_t m = 0; m < members.size(); ++m)
            if (members[m] == f) {
                idx = static_cast<int>(m);
                break;
            }
        if (idx < 0) {
            idx = static_cast<int>(members.size());
            members.push_back(std::move(f));
        }
        values[{i, j}] = idx;
    }
    if (members.empty()) members.push_back(Graph(q, {}, loop_mode));

    Decomposition d{std::move(base), GraphFamily(std::move(members)),
                    EdgeAssignment(std::move(values)), blocks, bijections};
    return d;
}

namespace {

struct DecomposeSearch {
    const Graph& g;
    int n, k, q;
    bool loop_mode;
    std::vector<uint64_t> adj;
    std::vector<std::vector<int>> blocks;
    std::vector<uint64_t> block_mask;
    std::vector<char> used;
    std::vector<std::vector<int>> phi;
    DecomposeStats stats;

    uint64_t bit(int v) const { return uint64_t(1) << v; }
    bool edge(int u, int v) const { return (adj[u] >> v) & 1; }

    bool blocks_compatible(int i) {
        for (int j = 0; j < i; ++j) {
            std::vector<int> di, dj;
            for (int w : blocks[i]) di.push_back(std::popcount(adj[w] & block_mask[j]));
            for (int w : blocks[j]) dj.push_back(std::popcount(adj[w] & block_mask[i]));
            std::sort(di.begin(), di.end());
            std::sort(dj.begin(), dj.end());
            if (di != dj) return false;
        }
        return true;
    }

    bool fill_block(int i, int from) {
        if (static_cast<int>(blocks[i].size()) == q) {
            if (!blocks_compatible(i)) return false;
            return next_block(i + 1);
        }
        for (int v = from; v < n; ++v) {
            if (used[v]) continue;
            if (!loop_mode && (adj[v] & block_mask[i])) continue;
            used[v] = 1;
            blocks[i].push_back(v);
            block_mask[i] |= bit(v);
            if (fill_block(i, v + 1)) return true;
            block_mask[i] &= ~bit(v);
            blocks[i].pop_back();
            used[v] = 0;
        }
        return false;
    }

    bool next_block(int i) {
        if (i == k) {
            ++stats.partitions_tried;
            phi[0] = blocks[0];
            return assign_block(1);
        }
        int m = 0;
        while (used[m]) ++m;
        used[m] = 1;
        blocks[i] = {m};
        block_mask[i] = bit(m);
        bool found = fill_block(i, m + 1);
        if (!found) {
            used[m] = 0;
            blocks[i].clear();
            block_mask[i] = 0;
        }
        return found;
    }

    bool assign_block(int i) {
        if (i == k) return true;
        phi[i].assign(q, -1);
        bool found = assign_pos(i, 0, 0);
        if (!found) phi[i].clear();
        return found;
    }

    bool assign_pos(int i, int t, uint64_t taken) {
        if (t == q) return assign_block(i + 1);
        for (int idx = 0; idx < q; ++idx) {
            if ((taken >> idx) & 1) continue;
            int w = blocks[i][idx];
            ++stats.assignment_nodes;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) {
                if (!loop_mode && edge(w, phi[j][t])) ok = false;
                for (int s = 0; s < t && ok; ++s)
                    if (edge(phi[i][s], phi[j][t]) != edge(w, phi[j][s])) ok = false;
            }
            if (!ok) continue;
            phi[i][t] = w;
            if (assign_pos(i, t + 1, taken | (uint64_t(1) << idx))) return true;
            phi[i][t] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<Decomposition> decompose(const Graph& g, int k, bool loop_mode, int guard,
                                       DecomposeStats* stats) {
    if (!g.loopless()) throw std::invalid_argument("graph to factor must be loopless");
    if (g.order() == 0) throw std::invalid_argument("graph to factor must be nonempty");
    if (k < 2) throw std::invalid_argument("need at least two blocks");
    if (g.order() % k != 0)
        throw std::invalid_argument("order " + std::to_string(g.order()) +
                                    " is not divisible by " + std::to_string(k));
    if (guard > 64) guard = 64;
    if (g.order() > guard)
        throw precondition_error("factorization search refused: order " +
                                 std::to_string(g.order()) + " exceeds guard " +
                                 std::to_string(guard));
    DecomposeSearch s{g,
                      g.order(),
                      k,
                      g.order() / k,
                      loop_mode,
                      {},
                      std::vector<std::vector<int>>(k),
                      std::vector<uint64_t>(k, 0),
                      std::vector<char>(g.order(), 0),
                      std::vector<std::vector<int>>(k),
                      {}};
    s.adj.assign(g.order(), 0);
    for (auto [u, v] : g.edges()) {
        s.adj[u] |= s.bit(v);
        s.adj[v] |= s.bit(u);
    }
    bool found = s.next_block(0);
    if (stats) *stats = s.stats;
    if (!found) return std::nullopt;
    return build_decomposition(g, s.blocks, s.phi, loop_mode);
}

OtimesInstance assoc_otimes_left(const Graph& g, const OtimesInstance& inst) {
    if (!g.loopless() || !inst.base().loopless())
        throw std::invalid_argument("regrouping requires loopless bases");
    ProductGraph p = direct_product(g, inst.base());
    int hn = inst.base().order();
    std::map<Edge, int> values;
    for (auto [pu, pv] : p.graph().edges())
        values[{pu, pv}] = inst.assignment().at(make_edge(pu % hn, pv % hn));
    return OtimesInstance(p.graph(), inst.family(), EdgeAssignment(std::move(values)));
}

std::optional<std::array<int, 4>> otimes_symmetry_violation(const Graph& g, const Graph& h,
                                                            const OtimesInstance& inst) {
    if (!g.loopless() || !h.loopless())
        throw std::invalid_argument("regrouping requires loopless bases");
    if (!(inst.base() == direct_product(g, h).graph()))
        throw std::invalid_argument("instance base is not the direct product of the given pair");
    int hn = h.order();
    for (auto [al, be] : g.edges())
        for (auto [a, b] : h.edges()) {
            if (a == b) continue;
            int m1 = inst.assignment().at(make_edge(al * hn + a, be * hn + b));
            int m2 = inst.assignment().at(make_edge(al * hn + b, be * hn + a));
            if (m1 != m2) return std::array<int, 4>{al, be, a, b};
        }
    return std::nullopt;
}

OtimesInstance assoc_otimes_right(const Graph& g, const Graph& h, const OtimesInstance& inst) {
    auto bad = otimes_symmetry_violation(g, h, inst);
    if (bad) {
        auto [al, be, a, b] = *bad;
        throw precondition_error("member assignment is not symmetric: base pair " +
                                 std::to_string(al) + "-" + std::to_string(be) +
                                 ", inner pair " + std::to_string(a) + "-" +
                                 std::to_string(b));
    }
    int hn = h.order();
    int q = inst.inner_order();
    std::vector<Graph> members;
    std::map<Edge, int> values;
    for (auto [al, be] : g.edges()) {
        std::map<Edge, int> inner_values;
        for (auto [a, b] : h.edges())
            inner_values[{a, b}] = inst.assignment().at(make_edge(al * hn + a, be * hn + b));
        Graph f = otimes_h(OtimesInstance(h, inst.family(), EdgeAssignment(std::move(inner_values))))
                      .graph();
        int idx = -1;
        for (size_t m = 0; m < members.size(); ++m)
            if (members[m] == f) {
                idx = static_cast<int>(m);
                break;
            }
        if (idx < 0) {
            idx = static_cast<int>(members.size());
            members.push_back(std::move(f));
        }
        values[{al, be}] = idx;
    }
    if (members.empty()) members.push_back(Graph(hn * q, {}));
    return OtimesInstance(g, GraphFamily(std::move(members)), EdgeAssignment(std::move(values)));
}

CircInstance assoc_circ_left(const Graph& g, const CircInstance& inst) {
    if (!g.loopless() || !inst.base().loopless())
        throw std::invalid_argument("regrouping requires loopless bases");
    ProductGraph p = lex_product(g, inst.base());
    int hn = inst.base().order();
    std::vector<int> values(p.order());
    for (int v = 0; v < p.order(); ++v) values[v] = inst.assignment().at(v % hn);
    return CircInstance(p.graph(), inst.family(), VertexAssignment(std::move(values)));
}

CircInstance assoc_circ_right(const Graph& g, const Graph& h, const CircInstance& inst) {
    if (!g.loopless() || !h.loopless())
        throw std::invalid_argument("regrouping requires loopless bases");
    if (g.order() < 1) throw std::invalid_argument("outer base must be nonempty");
    if (!(inst.base() == lex_product(g, h).graph()))
        throw std::invalid_argument("instance base is not the lexicographic product of the given pair");
    int hn = h.order();
    std::vector<Graph> members;
    std::vector<int> values(g.order());
    for (int al = 0; al < g.order(); ++al) {
        std::vector<int> inner_values(hn);
        for (int a = 0; a < hn; ++a) inner_values[a] = inst.assignment().at(al * hn + a);
        Graph f = circ_h(CircInstance(h, inst.family(), VertexAssignment(std::move(inner_values))))
                      .graph();
        int idx = -1;
        for (size_t m = 0; m < members.size(); ++m)
            if (members[m] == f) {
                idx = static_cast<int>(m);
                break;
            }
        if (idx < 0) {
            idx = static_cast<int>(members.size());
            members.push_back(std::move(f));
        }
        values[al] = idx;
    }
    return CircInstance(g, GraphFamily(std::move(members)), VertexAssignment(std::move(values)));
}

}  // namespace gprod
