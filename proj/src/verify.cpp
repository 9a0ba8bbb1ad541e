#include "gprod/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "gprod/connectivity.hpp"
#include "gprod/invariants.hpp"
#include "gprod/io.hpp"
#include "gprod/product.hpp"
#include "gprod/structure.hpp"

namespace gprod {

namespace {

VerifyReport report(const char* suite, uint64_t seed) {
    VerifyReport r;
    r.suite = suite;
    r.seed = seed;
    return r;
}

VerifyReport violated(VerifyReport r, std::string details, std::string doc) {
    r.status = VerifyStatus::violation;
    r.details = std::move(details);
    r.instance_doc = std::move(doc);
    return r;
}

VerifyReport skipped(VerifyReport r, std::string why) {
    r.status = VerifyStatus::hypothesis_unmet;
    r.details = std::move(why);
    return r;
}

int pick(SplitMix64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng.below(static_cast<uint32_t>(hi - lo + 1)));
}

double pick_density(SplitMix64& rng) {
    static const double table[] = {0.2, 0.35, 0.5, 0.7};
    return table[rng.below(4)];
}

// Connected graph with an odd cycle; order must be at least 3.
Graph nonbip_connected(SplitMix64& rng, int order, double density) {
    Graph g = random_graph(rng, order, density, true);
    if (!g.is_bipartite()) return g;
    auto decomp = components(g);
    const auto& sides = *decomp.blocks.front().bipartition;
    const auto& big = sides.first.size() >= 2 ? sides.first : sides.second;
    int a = pick(rng, 0, static_cast<int>(big.size()) - 1);
    int b = pick(rng, 0, static_cast<int>(big.size()) - 2);
    if (b >= a) ++b;
    std::vector<Edge> es = g.edges();
    es.push_back(make_edge(big[a], big[b]));
    return Graph(order, std::move(es));
}

bool witness_is_component(const Graph& g, const std::vector<int>& w) {
    for (const auto& block : components(g).blocks)
        if (block.vertices == w) return true;
    return false;
}

OtimesInstance constant_otimes(const Graph& base, const Graph& member) {
    return OtimesInstance(base, GraphFamily({member}), EdgeAssignment::constant(base, 0));
}

OtimesInstance gen_otimes(SplitMix64& rng, int base_lo, int base_hi, int inner_lo, int inner_hi,
                          MemberMode mode, bool base_connected = true) {
    GenParams p;
    p.kind = ProductKind::otimes_h;
    p.base_order = pick(rng, base_lo, base_hi);
    p.inner_order = pick(rng, inner_lo, inner_hi);
    p.edge_density = pick_density(rng);
    p.family_size = pick(rng, 1, 3);
    p.member_mode = mode;
    p.base_connected = base_connected;
    return std::get<OtimesInstance>(random_instance(rng.next(), p));
}

CircInstance gen_circ(SplitMix64& rng, int base_lo, int base_hi, int inner_lo, int inner_hi,
                      MemberMode mode, bool base_connected, bool shared) {
    GenParams p;
    p.kind = ProductKind::circ_h;
    p.base_order = pick(rng, base_lo, base_hi);
    p.inner_order = pick(rng, inner_lo, inner_hi);
    p.edge_density = pick_density(rng);
    p.family_size = pick(rng, 1, 3);
    p.member_mode = mode;
    p.base_connected = base_connected;
    p.shared_inner = shared;
    return std::get<CircInstance>(random_instance(rng.next(), p));
}

VerifyReport suite_weichsel(uint64_t seed) {
    VerifyReport r = report("weichsel", seed);
    SplitMix64 rng(seed);
    int n1 = pick(rng, 1, 5);
    double d1 = pick_density(rng);
    bool c1 = rng.chance(0.7);
    Graph g = random_graph(rng, n1, d1, c1);
    int n2 = pick(rng, 1, 5);
    double d2 = pick_density(rng);
    bool c2 = rng.chance(0.7);
    Graph h = random_graph(rng, n2, d2, c2);
    ProductGraph p = direct_product(g, h);
    auto verdict = bfs_connectivity(p.graph());
    bool expected = p.order() <= 1 ||
                    (g.is_connected() && h.is_connected() && g.is_nontrivial() &&
                     h.is_nontrivial() && !(g.is_bipartite() && h.is_bipartite()));
    std::string doc = serialize_otimes(constant_otimes(g, h));
    if (verdict.connected != expected)
        return violated(std::move(r), "direct product connectivity disagrees with the criterion",
                        doc);
    if (g.is_connected() && h.is_connected() && g.is_nontrivial() && h.is_nontrivial() &&
        g.is_bipartite() && h.is_bipartite() && verdict.component_count != 2)
        return violated(std::move(r), "bipartite-bipartite direct product must have two components",
                        doc);
    if (h.is_connected() && h.is_bipartite()) {
        // The two components of K2 x h pair one side with the other.
        auto hcomp = components(h);
        const auto& sides = *hcomp.blocks.front().bipartition;
        ProductGraph p2 = direct_product(Graph::complete(2), h);
        std::vector<int> c1, c2;
        for (int x : sides.first) {
            c1.push_back(x);
            c2.push_back(h.order() + x);
        }
        for (int y : sides.second) {
            c1.push_back(h.order() + y);
            c2.push_back(y);
        }
        std::sort(c1.begin(), c1.end());
        std::sort(c2.begin(), c2.end());
        auto comp = components(p2.graph());
        if (comp.count() != 2 || comp.blocks[0].vertices != c1 || comp.blocks[1].vertices != c2)
            return violated(std::move(r), "components of K2 x bipartite are not the paired sides",
                            serialize_otimes(constant_otimes(Graph::complete(2), h)));
    }
    return r;
}

VerifyReport suite_main_otimes(uint64_t seed) {
    VerifyReport r = report("main-otimes", seed);
    SplitMix64 rng(seed);
    OtimesInstance inst = gen_otimes(rng, 2, 5, 2, 4, MemberMode::connected);
    Graph p = otimes_h(inst).graph();
    auto predicted = predict_otimes_connectivity(inst);
    auto actual = bfs_connectivity(p);
    std::string doc = serialize_otimes(inst);
    if (predicted.connected != actual.connected)
        return violated(std::move(r), "bipartite criterion disagrees with search", doc);
    if (!predicted.connected) {
        if (predicted.component_count != actual.component_count)
            return violated(std::move(r), "disconnected product must have exactly two components",
                            doc);
        if (!witness_is_component(p, predicted.witness))
            return violated(std::move(r), "predicted class is not a component", doc);
    }
    return r;
}

VerifyReport suite_fiber_family(uint64_t seed) {
    VerifyReport r = report("fiber-family", seed);
    SplitMix64 rng(seed);
    OtimesInstance inst = gen_otimes(rng, 2, 5, 1, 4, MemberMode::any);
    Graph p = otimes_h(inst).graph();
    auto predicted = otimes_connected_via_family(inst);
    auto actual = bfs_connectivity(p);
    std::string doc = serialize_otimes(inst);
    if (predicted.connected != actual.connected ||
        predicted.component_count != actual.component_count)
        return violated(std::move(r), "fiber set components disagree with search", doc);
    if (!predicted.connected && !witness_is_component(p, predicted.witness))
        return violated(std::move(r), "fiber set witness is not a component", doc);
    return r;
}

VerifyReport suite_partitions(uint64_t seed) {
    VerifyReport r = report("partitions", seed);
    SplitMix64 rng(seed);
    int ground = pick(rng, 3, 8);
    int m = pick(rng, 1, 3);
    std::vector<Partition> parts;
    std::vector<std::vector<int>> all_blocks;
    for (int i = 0; i < m; ++i) {
        int k = pick(rng, 1, 3);
        std::vector<std::vector<int>> blocks(k);
        for (int v = 0; v < ground; ++v) blocks[rng.below(static_cast<uint32_t>(k))].push_back(v);
        blocks.erase(std::remove_if(blocks.begin(), blocks.end(),
                                    [](const auto& b) { return b.empty(); }),
                     blocks.end());
        parts.emplace_back(ground, blocks);
        for (auto& b : blocks) all_blocks.push_back(b);
    }
    auto w = partition_disconnection_witness(parts);
    bool disconnected = !bfs_connectivity(intersection_graph(all_blocks)).connected;
    if (w.has_value() != disconnected)
        return violated(std::move(r), "witness existence disagrees with the intersection graph", "");
    if (w) {
        std::set<int> uni(w->common_union.begin(), w->common_union.end());
        if (uni.empty() || static_cast<int>(uni.size()) == ground)
            return violated(std::move(r), "common union must be a proper nonempty subset", "");
        for (int i = 0; i < m; ++i) {
            const auto& sub = w->subfamilies[i];
            if (sub.empty() || sub.size() == parts[i].blocks().size())
                return violated(std::move(r), "subfamilies must be nonempty and proper", "");
            std::set<int> u;
            for (const auto& b : sub) u.insert(b.begin(), b.end());
            if (u != uni)
                return violated(std::move(r), "subfamily unions must agree", "");
        }
    }
    return r;
}

VerifyReport suite_partition_otimes(uint64_t seed) {
    VerifyReport r = report("partition-otimes", seed);
    SplitMix64 rng(seed);
    OtimesInstance inst = [&rng]() {
        if (rng.chance(0.5)) {
            // All member components have odd cycles; some members are split.
            int s = pick(rng, 3, 4), t = pick(rng, 3, 4);
            double d = pick_density(rng);
            Graph base = random_graph(rng, pick(rng, 2, 3), d, true);
            int fam = pick(rng, 1, 2);
            std::vector<Graph> members;
            for (int i = 0; i < fam; ++i) {
                if (rng.chance(0.5)) {
                    Graph left = nonbip_connected(rng, s, d);
                    Graph right = nonbip_connected(rng, t, d);
                    members.push_back(disjoint_union(left, right));
                } else {
                    members.push_back(nonbip_connected(rng, s + t, d));
                }
            }
            std::map<Edge, int> values;
            for (auto e : base.edges()) values[e] = pick(rng, 0, fam - 1);
            return OtimesInstance(base, GraphFamily(std::move(members)),
                                  EdgeAssignment(std::move(values)));
        }
        // Star base with a surjective assignment onto degree-1-or-more members.
        int leaves = pick(rng, 2, 4);
        int inner = pick(rng, 2, 4);
        double d = pick_density(rng);
        Graph base = Graph::star(leaves);
        int fam = pick(rng, 1, leaves);
        std::vector<Graph> members;
        for (int i = 0; i < fam; ++i) {
            if (inner >= 4 && rng.chance(0.4)) {
                Graph left = random_graph(rng, 2, d, true);
                Graph right = random_graph(rng, inner - 2, d, true);
                members.push_back(disjoint_union(left, right));
            } else {
                members.push_back(random_graph(rng, inner, d, true));
            }
        }
        std::map<Edge, int> values;
        int next = 0;
        for (auto e : base.edges()) values[e] = next++ % fam;
        return OtimesInstance(base, GraphFamily(std::move(members)),
                              EdgeAssignment(std::move(values)));
    }();
    Graph p = otimes_h(inst).graph();
    auto w = predict_disconnection_via_partitions(inst);
    bool disconnected = !bfs_connectivity(p).connected;
    std::string doc = serialize_otimes(inst);
    if (w.has_value() != disconnected)
        return violated(std::move(r), "partition witness disagrees with search", doc);
    if (w) {
        std::set<int> uni(w->common_union.begin(), w->common_union.end());
        if (uni.empty() || static_cast<int>(uni.size()) == inst.inner_order())
            return violated(std::move(r), "common union must be a proper nonempty subset", doc);
    }
    return r;
}

VerifyReport suite_kappa_circ(uint64_t seed) {
    VerifyReport r = report("kappa-circ", seed);
    SplitMix64 rng(seed);
    CircInstance inst = [&rng]() {
        if (rng.below(3) == 0) {
            // Complete bases exercise the fiber term, one-vertex bases included.
            Graph base = Graph::complete(pick(rng, 1, 4));
            int fam = pick(rng, 1, 3);
            int inner = pick(rng, 2, 4);
            double d = pick_density(rng);
            std::vector<Graph> members;
            for (int i = 0; i < fam; ++i) members.push_back(random_graph(rng, inner, d, false));
            std::vector<int> values(base.order());
            for (int v = 0; v < base.order(); ++v) values[v] = pick(rng, 0, fam - 1);
            return CircInstance(base, GraphFamily(std::move(members)),
                                VertexAssignment(std::move(values)));
        }
        return gen_circ(rng, 2, 4, 2, 4, MemberMode::any, true, true);
    }();
    int predicted = kappa_circ(inst);
    int actual = kappa_exact(circ_h(inst).graph()).value;
    if (predicted != actual)
        return violated(std::move(r),
                        "vertex connectivity formula gave " + std::to_string(predicted) +
                            " but the product has " + std::to_string(actual),
                        serialize_circ(inst));
    return r;
}

VerifyReport suite_lambda_circ(uint64_t seed) {
    VerifyReport r = report("lambda-circ", seed);
    SplitMix64 rng(seed);
    CircInstance inst = gen_circ(rng, 2, 4, 2, 4, MemberMode::any, true, true);
    int predicted = lambda_circ(inst);
    int actual = lambda_exact(circ_h(inst).graph()).value;
    if (predicted != actual)
        return violated(std::move(r),
                        "edge connectivity formula gave " + std::to_string(predicted) +
                            " but the product has " + std::to_string(actual),
                        serialize_circ(inst));
    return r;
}

VerifyReport suite_alpha_circ(uint64_t seed) {
    VerifyReport r = report("alpha-circ", seed);
    SplitMix64 rng(seed);
    bool bc = rng.chance(0.7);
    bool shared = rng.chance(0.5);
    CircInstance inst = gen_circ(rng, 2, 4, 1, 4, MemberMode::any, bc, shared);
    auto predicted = alpha_circ(inst);
    int actual = alpha_exact(circ_h(inst).graph()).value;
    if (predicted.value != actual)
        return violated(std::move(r),
                        "weighted independence gave " + std::to_string(predicted.value) +
                            " but the product has " + std::to_string(actual),
                        serialize_circ(inst));
    return r;
}

VerifyReport suite_alpha_otimes(uint64_t seed) {
    VerifyReport r = report("alpha-otimes", seed);
    SplitMix64 rng(seed);
    bool bc = rng.chance(0.7);
    OtimesInstance inst = gen_otimes(rng, 2, 4, 2, 5, MemberMode::any, bc);
    int bound = alpha_otimes_lower(inst);
    int actual = alpha_exact(otimes_h(inst).graph()).value;
    if (bound > actual)
        return violated(std::move(r),
                        "independence bound " + std::to_string(bound) + " exceeds the true " +
                            std::to_string(actual),
                        serialize_otimes(inst));
    return r;
}

VerifyReport suite_domination(uint64_t seed) {
    VerifyReport r = report("domination", seed);
    SplitMix64 rng(seed);
    // Members extend a common spanning subgraph so the tripled upper bound
    // applies; isolated vertices are patched to keep total domination defined.
    int inner = pick(rng, 2, 4);
    double d = pick_density(rng);
    Graph base = random_graph(rng, pick(rng, 2, 4), d, true);
    Graph common = random_graph(rng, inner, 0.3, false);
    int fam = pick(rng, 1, 2);
    std::vector<Graph> members;
    for (int i = 0; i < fam; ++i) {
        Graph extra = random_graph(rng, inner, d, false);
        Graph m = union_on_same_vertices(common, extra);
        std::vector<Edge> es = m.edges();
        for (int v = 0; v < inner; ++v) {
            if (m.degree(v) > 0) continue;
            int u = pick(rng, 0, inner - 2);
            if (u >= v) ++u;
            es.push_back(make_edge(u, v));
        }
        members.push_back(Graph(inner, std::move(es)));
    }
    std::map<Edge, int> values;
    for (auto e : base.edges()) values[e] = pick(rng, 0, fam - 1);
    OtimesInstance inst(base, GraphFamily(members), EdgeAssignment(std::move(values)));
    std::string doc = serialize_otimes(inst);

    Graph p = otimes_h(inst).graph();
    int gamma = gamma_exact(p).value;
    auto lower = gamma_otimes_lower(inst);
    if (lower.union_bound > lower.bound)
        return violated(std::move(r), "union-graph bound must not beat the local bound", doc);
    if (lower.bound > gamma)
        return violated(std::move(r),
                        "domination bound " + std::to_string(lower.bound) + " exceeds the true " +
                            std::to_string(gamma),
                        doc);
    if (p.min_degree() >= 1) {
        int gamma_t = gamma_t_exact(p).value;
        if (lower.bound > gamma_t)
            return violated(std::move(r), "domination bound exceeds the total domination number",
                            doc);
    }
    int upper = gamma_otimes_upper(inst, common);
    if (upper < gamma)
        return violated(std::move(r),
                        "tripled upper bound " + std::to_string(upper) + " is under the true " +
                            std::to_string(gamma),
                        doc);

    std::vector<int> base_td = gamma_t_exact(base).witness;
    std::map<Edge, std::vector<int>> edge_td, edge_sub;
    for (auto e : base.edges()) {
        edge_td[e] = gamma_t_exact(inst.member_for(e)).witness;
        edge_sub[e] = edge_td[e];
    }
    std::vector<int> x = dominating_set_construct(inst, base_td, edge_td, base_td, edge_sub);
    std::vector<char> covered(p.order(), 0);
    for (int v : x) {
        covered[v] = 1;
        for (int w : p.neighbors(v)) covered[w] = 1;
    }
    if (std::count(covered.begin(), covered.end(), 1) != p.order())
        return violated(std::move(r), "assembled set does not dominate the product", doc);

    bool cbc = rng.chance(0.7);
    CircInstance cinst = gen_circ(rng, 2, 4, 1, 4, MemberMode::any, cbc, false);
    auto cupper = gamma_circ_upper(cinst);
    int cgamma = gamma_exact(circ_h(cinst).graph()).value;
    if (cupper.value < cgamma)
        return violated(std::move(r),
                        "fiber-sum upper bound " + std::to_string(cupper.value) +
                            " is under the true " + std::to_string(cgamma),
                        serialize_circ(cinst));
    return r;
}

VerifyReport suite_chromatic(uint64_t seed) {
    VerifyReport r = report("chromatic", seed);
    SplitMix64 rng(seed);
    bool cbc = rng.chance(0.7);
    bool shared = rng.chance(0.5);
    CircInstance cinst = gen_circ(rng, 2, 4, 1, 4, MemberMode::any, cbc, shared);
    Graph cp = circ_h(cinst).graph();
    int chi = chi_exact(cp).value;
    if (chi > chi_circ_upper(cinst))
        return violated(std::move(r), "product chromatic number exceeds the fiber bound",
                        serialize_circ(cinst));
    CircInstance reduced = reduce_to_complete_fibers(cinst);
    int chi_reduced = chi_exact(circ_h(reduced).graph()).value;
    if (chi_reduced != chi)
        return violated(std::move(r),
                        "complete-fiber reduction changed the chromatic number from " +
                            std::to_string(chi) + " to " + std::to_string(chi_reduced),
                        serialize_circ(cinst));

    bool obc = rng.chance(0.7);
    OtimesInstance oinst = gen_otimes(rng, 2, 4, 2, 4, MemberMode::any, obc);
    Graph op = otimes_h(oinst).graph();
    auto bounds = chi_omega_otimes_bounds(oinst);
    if (chi_exact(op).value > bounds.chi_bound)
        return violated(std::move(r), "product chromatic number exceeds the factor bound",
                        serialize_otimes(oinst));
    if (omega_exact(op).value > bounds.omega_bound)
        return violated(std::move(r), "product clique number exceeds the factor bound",
                        serialize_otimes(oinst));
    return r;
}

VerifyReport suite_clique(uint64_t seed) {
    VerifyReport r = report("clique", seed);
    SplitMix64 rng(seed);
    int inner = pick(rng, 2, 4);
    int fam = pick(rng, 1, 3);
    double d = rng.chance(0.5) ? 0.5 : 0.7;
    std::vector<Graph> members;
    for (int i = 0; i < fam; ++i) members.push_back(random_graph(rng, inner, d, false));
    GraphFamily family(std::move(members));
    int base_order = pick(rng, 2, 4);
    double base_density = pick_density(rng);
    Graph base = random_graph(rng, base_order, base_density, true);

    auto ca = clique_realizing_assignment(base, family);
    OtimesInstance inst(base, family, ca.assignment);
    int actual = omega_exact(otimes_h(inst).graph()).value;
    if (actual != ca.clique_size)
        return violated(std::move(r),
                        "realizing assignment promised a clique of " +
                            std::to_string(ca.clique_size) + " but the product has " +
                            std::to_string(actual),
                        serialize_otimes(inst));

    int s = omega_exact(sigma_gamma(family)).value;
    Graph kbase = Graph::complete(s);
    auto ca2 = clique_realizing_assignment(kbase, family);
    OtimesInstance inst2(kbase, family, ca2.assignment);
    int chi2 = chi_exact(otimes_h(inst2).graph()).value;
    if (chi2 != s)
        return violated(std::move(r),
                        "complete base matching the family clique must color with " +
                            std::to_string(s) + ", got " + std::to_string(chi2),
                        serialize_otimes(inst2));
    return r;
}

VerifyReport suite_kneser_tuple(uint64_t seed) {
    VerifyReport r = report("kneser-tuple", seed);
    SplitMix64 rng(seed);
    int n = pick(rng, 2, 5);
    double d = pick_density(rng);
    bool bc = rng.chance(0.7);
    Graph g = random_graph(rng, n, d, bc);
    std::vector<int> demands(g.order());
    for (int& x : demands) x = pick(rng, 1, 2);
    auto tuple = h_tuple_chromatic(g, demands);

    for (int v = 0; v < g.order(); ++v) {
        if (static_cast<int>(tuple.sets[v].size()) != demands[v])
            return violated(std::move(r), "color set sizes must match the demands",
                            serialize_graph(g));
        for (int c : tuple.sets[v])
            if (c < 0 || c >= tuple.value)
                return violated(std::move(r), "color out of range", serialize_graph(g));
    }
    for (auto [u, v] : g.edges())
        for (int c : tuple.sets[u])
            for (int c2 : tuple.sets[v])
                if (c == c2)
                    return violated(std::move(r), "adjacent color sets must be disjoint",
                                    serialize_graph(g));

    std::set<int> distinct(demands.begin(), demands.end());
    std::vector<Graph> members;
    std::map<int, int> where;
    for (int x : distinct) {
        where[x] = static_cast<int>(members.size());
        members.push_back(Graph::complete(x));
    }
    std::vector<int> values(g.order());
    for (int v = 0; v < g.order(); ++v) values[v] = where[demands[v]];
    CircInstance cinst(g, GraphFamily(std::move(members)), VertexAssignment(std::move(values)));
    int via_product = chi_exact(circ_h(cinst).graph()).value;
    if (via_product != tuple.value)
        return violated(std::move(r),
                        "tuple coloring gave " + std::to_string(tuple.value) +
                            " but the complete-fiber product needs " + std::to_string(via_product),
                        serialize_circ(cinst));

    bool all_one = std::all_of(demands.begin(), demands.end(), [](int x) { return x == 1; });
    if (all_one && tuple.value != chi_exact(g).value)
        return violated(std::move(r), "unit demands must reproduce the chromatic number",
                        serialize_graph(g));

    int kn = pick(rng, 2, 4);
    std::vector<int> kd(kn);
    for (int& x : kd) x = pick(rng, 1, 2);
    int total = std::accumulate(kd.begin(), kd.end(), 0);
    if (h_tuple_chromatic(Graph::complete(kn), kd).value != total)
        return violated(std::move(r), "complete bases need one color per demand unit", "");

    int s = pick(rng, 2, 5);
    if (!(kneser_graph({1}, s) == Graph::complete(s)))
        return violated(std::move(r), "demand-1 disjointness graph must be complete", "");
    return r;
}

VerifyReport suite_assoc(uint64_t seed) {
    VerifyReport r = report("assoc", seed);
    SplitMix64 rng(seed);
    double d = pick_density(rng);
    int gn = pick(rng, 2, 3);
    bool gc = rng.chance(0.7);
    Graph g = random_graph(rng, gn, d, gc);
    int hn = pick(rng, 2, 3);
    bool hc = rng.chance(0.7);
    Graph h = random_graph(rng, hn, d, hc);
    int inner = pick(rng, 2, 3);
    int fam = pick(rng, 1, 2);
    std::vector<Graph> members;
    for (int i = 0; i < fam; ++i) members.push_back(random_graph(rng, inner, d, false));
    GraphFamily family(std::move(members));

    std::map<Edge, int> hv;
    for (auto e : h.edges()) hv[e] = pick(rng, 0, fam - 1);
    OtimesInstance inst(h, family, EdgeAssignment(std::move(hv)));
    Graph flat = direct_product(g, otimes_h(inst).graph()).graph();
    OtimesInstance left = assoc_otimes_left(g, inst);
    if (!(otimes_h(left).graph() == flat))
        return violated(std::move(r), "grouped and flat edge-indexed products differ",
                        serialize_otimes(inst));
    if (otimes_symmetry_violation(g, h, left))
        return violated(std::move(r), "regrouped assignment must be symmetric",
                        serialize_otimes(left));
    OtimesInstance right = assoc_otimes_right(g, h, left);
    if (!(otimes_h(right).graph() == flat))
        return violated(std::move(r), "edge-indexed regrouping changed the product",
                        serialize_otimes(left));

    std::vector<Graph> cmembers;
    for (int i = 0; i < fam; ++i) cmembers.push_back(random_graph(rng, pick(rng, 1, 3), d, false));
    GraphFamily cfamily(std::move(cmembers));
    std::vector<int> cv(h.order());
    for (int& x : cv) x = pick(rng, 0, fam - 1);
    CircInstance cinst(h, cfamily, VertexAssignment(std::move(cv)));
    Graph cflat = lex_product(g, circ_h(cinst).graph()).graph();
    CircInstance cleft = assoc_circ_left(g, cinst);
    if (!(circ_h(cleft).graph() == cflat))
        return violated(std::move(r), "grouped and flat vertex-indexed products differ",
                        serialize_circ(cinst));
    CircInstance cright = assoc_circ_right(g, h, cleft);
    if (!(circ_h(cright).graph() == cflat))
        return violated(std::move(r), "vertex-indexed regrouping changed the product",
                        serialize_circ(cleft));
    return r;
}

VerifyReport suite_degree(uint64_t seed) {
    VerifyReport r = report("degree", seed);
    SplitMix64 rng(seed);
    bool obc = rng.chance(0.7);
    OtimesInstance inst = gen_otimes(rng, 2, 4, 1, 4, MemberMode::any, obc);
    ProductGraph p = otimes_h(inst);
    for (int v = 0; v < p.order(); ++v) {
        auto [a, x] = p.pair_of(v);
        if (product_degree(inst, a, x) != p.graph().degree(v))
            return violated(std::move(r), "edge-indexed degree formula is off at vertex " +
                                              std::to_string(v),
                            serialize_otimes(inst));
    }
    bool cbc = rng.chance(0.7);
    CircInstance cinst = gen_circ(rng, 2, 4, 1, 4, MemberMode::any, cbc, false);
    ProductGraph cp = circ_h(cinst);
    for (int v = 0; v < cp.order(); ++v) {
        auto [a, x] = cp.pair_of(v);
        if (product_degree(cinst, a, x) != cp.graph().degree(v))
            return violated(std::move(r), "vertex-indexed degree formula is off at vertex " +
                                              std::to_string(v),
                            serialize_circ(cinst));
    }
    CircInstance minst = gen_circ(rng, 2, 4, 1, 4, MemberMode::any, true, true);
    if (min_degree_circ(minst) != circ_h(minst).graph().min_degree())
        return violated(std::move(r), "minimum degree formula disagrees with the product",
                        serialize_circ(minst));
    return r;
}

VerifyReport suite_sufficient(uint64_t seed) {
    VerifyReport r = report("sufficient", seed);
    SplitMix64 rng(seed);
    OtimesInstance inst = gen_otimes(rng, 2, 4, 2, 4, MemberMode::delta_one);
    auto cert = sufficient_connectivity_check(inst);
    if (!cert) return skipped(std::move(r), "no sufficient condition fired");
    Graph p = otimes_h(inst).graph();
    if (!bfs_connectivity(p).connected)
        return violated(std::move(r), "certificate issued for a disconnected product",
                        serialize_otimes(inst));
    if (!inst.base().has_edge(cert->e1.first, cert->e1.second))
        return violated(std::move(r), "certificate names a non-edge", serialize_otimes(inst));
    if (cert->kind != SufficiencyCertificate::Kind::one_edge) {
        if (!inst.base().has_edge(cert->e2.first, cert->e2.second))
            return violated(std::move(r), "certificate names a non-edge", serialize_otimes(inst));
        int b = cert->shared_vertex;
        bool shares = (cert->e1.first == b || cert->e1.second == b) &&
                      (cert->e2.first == b || cert->e2.second == b);
        if (!shares)
            return violated(std::move(r), "certificate edges do not share the named vertex",
                            serialize_otimes(inst));
    }
    return r;
}

struct SuiteEntry {
    const char* name;
    VerifyReport (*run)(uint64_t);
};

const SuiteEntry kSuites[] = {
    {"weichsel", suite_weichsel},
    {"main-otimes", suite_main_otimes},
    {"fiber-family", suite_fiber_family},
    {"partitions", suite_partitions},
    {"partition-otimes", suite_partition_otimes},
    {"kappa-circ", suite_kappa_circ},
    {"lambda-circ", suite_lambda_circ},
    {"alpha-circ", suite_alpha_circ},
    {"alpha-otimes", suite_alpha_otimes},
    {"domination", suite_domination},
    {"chromatic", suite_chromatic},
    {"clique", suite_clique},
    {"kneser-tuple", suite_kneser_tuple},
    {"assoc", suite_assoc},
    {"degree", suite_degree},
    {"sufficient", suite_sufficient},
};

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> names;
    for (const auto& s : kSuites) names.push_back(s.name);
    std::sort(names.begin(), names.end());
    return names;
}

VerifyReport run_case(const std::string& suite, uint64_t seed) {
    for (const auto& s : kSuites)
        if (suite == s.name) return s.run(seed);
    std::string known;
    for (const auto& s : kSuites) known += std::string(known.empty() ? "" : ", ") + s.name;
    throw std::invalid_argument("unknown suite \"" + suite + "\"; available: " + known);
}

SuiteResult run_suite(const std::string& suite, uint64_t seed_begin, uint64_t seed_end) {
    SuiteResult result;
    result.suite = suite;
    for (uint64_t seed = seed_begin; seed < seed_end; ++seed) {
        VerifyReport r = run_case(suite, seed);
        switch (r.status) {
            case VerifyStatus::confirmed:
                ++result.checked;
                break;
            case VerifyStatus::hypothesis_unmet:
                ++result.skipped;
                break;
            case VerifyStatus::violation:
                result.violations.push_back(std::move(r));
                break;
        }
    }
    return result;
}

}  // namespace gprod
