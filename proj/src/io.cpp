#include "gprod/io.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "json.hpp"

namespace gprod {

namespace {

using nlohmann::json;

json graph_to_json(const Graph& g) {
    json j;
    j["order"] = g.order();
    json es = json::array();
    for (auto [u, v] : g.edges()) es.push_back(json::array({u, v}));
    j["edges"] = std::move(es);
    if (g.allows_loops()) j["loops"] = true;
    return j;
}

void reject_unknown(const json& j, std::initializer_list<const char*> allowed,
                    const char* where) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* k : allowed)
            if (it.key() == k) known = true;
        if (!known)
            throw std::invalid_argument(std::string("unknown field \"") + it.key() + "\" in " +
                                        where);
    }
}

Graph graph_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("graph must be an object");
    reject_unknown(j, {"order", "edges", "loops"}, "graph");
    if (!j.contains("order") || !j["order"].is_number_integer())
        throw std::invalid_argument("graph needs an integer \"order\"");
    if (!j.contains("edges") || !j["edges"].is_array())
        throw std::invalid_argument("graph needs an \"edges\" array");
    bool loops = false;
    if (j.contains("loops")) {
        if (!j["loops"].is_boolean()) throw std::invalid_argument("\"loops\" must be a boolean");
        loops = j["loops"].get<bool>();
    }
    std::vector<Edge> es;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw std::invalid_argument("each edge must be a pair of integers");
        es.push_back(make_edge(e[0].get<int>(), e[1].get<int>()));
    }
    return Graph(j["order"].get<int>(), std::move(es), loops);
}

Edge parse_edge_key(const std::string& key) {
    auto dash = key.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == key.size())
        throw std::invalid_argument("assignment key \"" + key + "\" is not of the form \"u-v\"");
    size_t used1 = 0, used2 = 0;
    int u, v;
    try {
        u = std::stoi(key.substr(0, dash), &used1);
        v = std::stoi(key.substr(dash + 1), &used2);
    } catch (const std::exception&) {
        throw std::invalid_argument("assignment key \"" + key + "\" is not of the form \"u-v\"");
    }
    if (used1 != dash || used2 != key.size() - dash - 1 || u > v)
        throw std::invalid_argument("assignment key \"" + key + "\" is not of the form \"u-v\"");
    return {u, v};
}

json family_to_json(const GraphFamily& fam) {
    json arr = json::array();
    for (int i = 0; i < fam.size(); ++i) arr.push_back(graph_to_json(fam.member(i)));
    return arr;
}

GraphFamily family_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("\"family\" must be a nonempty array of graphs");
    std::vector<Graph> members;
    for (const auto& m : j) members.push_back(graph_from_json(m));
    return GraphFamily(std::move(members));
}

}  // namespace

std::string serialize_graph(const Graph& g) { return graph_to_json(g).dump(2); }

Graph parse_graph(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("bad JSON: ") + e.what());
    }
    return graph_from_json(j);
}

std::string serialize_otimes(const OtimesInstance& inst) {
    json j;
    j["kind"] = "otimes";
    j["base"] = graph_to_json(inst.base());
    j["family"] = family_to_json(inst.family());
    json asg = json::object();
    for (const auto& [e, idx] : inst.assignment().values())
        asg[std::to_string(e.first) + "-" + std::to_string(e.second)] = idx;
    j["assignment"] = std::move(asg);
    return j.dump(2);
}

std::string serialize_circ(const CircInstance& inst) {
    json j;
    j["kind"] = "circ";
    j["base"] = graph_to_json(inst.base());
    j["family"] = family_to_json(inst.family());
    json asg = json::object();
    const auto& values = inst.assignment().values();
    for (size_t v = 0; v < values.size(); ++v) asg[std::to_string(v)] = values[v];
    j["assignment"] = std::move(asg);
    return j.dump(2);
}

std::string serialize_instance(const AnyInstance& inst) {
    if (std::holds_alternative<OtimesInstance>(inst))
        return serialize_otimes(std::get<OtimesInstance>(inst));
    return serialize_circ(std::get<CircInstance>(inst));
}

AnyInstance parse_instance(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("instance must be an object");
    reject_unknown(j, {"kind", "base", "family", "assignment"}, "instance");
    for (const char* k : {"kind", "base", "family", "assignment"})
        if (!j.contains(k))
            throw std::invalid_argument(std::string("instance needs a \"") + k + "\" field");
    if (!j["kind"].is_string()) throw std::invalid_argument("\"kind\" must be a string");
    std::string kind = j["kind"].get<std::string>();
    Graph base = graph_from_json(j["base"]);
    GraphFamily fam = family_from_json(j["family"]);
    const json& asg = j["assignment"];
    if (!asg.is_object()) throw std::invalid_argument("\"assignment\" must be an object");
    if (kind == "otimes") {
        std::map<Edge, int> values;
        for (auto it = asg.begin(); it != asg.end(); ++it) {
            if (!it.value().is_number_integer())
                throw std::invalid_argument("assignment values must be integers");
            values[parse_edge_key(it.key())] = it.value().get<int>();
        }
        return OtimesInstance(std::move(base), std::move(fam), EdgeAssignment(std::move(values)));
    }
    if (kind == "circ") {
        std::vector<int> values(base.order(), -1);
        if (static_cast<int>(asg.size()) != base.order())
            throw std::invalid_argument("assignment must cover every base vertex");
        for (auto it = asg.begin(); it != asg.end(); ++it) {
            size_t used = 0;
            int v;
            try {
                v = std::stoi(it.key(), &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("assignment key \"" + it.key() +
                                            "\" is not a vertex");
            }
            if (used != it.key().size() || v < 0 || v >= base.order())
                throw std::invalid_argument("assignment key \"" + it.key() +
                                            "\" is not a vertex");
            if (!it.value().is_number_integer())
                throw std::invalid_argument("assignment values must be integers");
            values[v] = it.value().get<int>();
        }
        return CircInstance(std::move(base), std::move(fam), VertexAssignment(std::move(values)));
    }
    throw std::invalid_argument("\"kind\" must be \"otimes\" or \"circ\"");
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    long long order = 0, m = 0;
    if (!(in >> order >> m) || order < 0 || m < 0)
        throw std::invalid_argument("edge list must start with \"order edge_count\"");
    std::vector<Edge> es;
    bool loops = false;
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (!(in >> u >> v)) throw std::invalid_argument("edge list ended early");
        Edge e = make_edge(static_cast<int>(u), static_cast<int>(v));
        loops = loops || e.first == e.second;
        es.push_back(e);
    }
    long long extra;
    if (in >> extra) throw std::invalid_argument("trailing data after the declared edges");
    return Graph(static_cast<int>(order), std::move(es), loops);
}

uint64_t SplitMix64::next() {
    state_ += 0x9e3779b97f4a7c15ull;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

uint32_t SplitMix64::below(uint32_t bound) {
    if (bound == 0) throw std::invalid_argument("bound must be positive");
    // Lemire's method: widen, keep the high word, reject the biased band.
    uint64_t threshold = (~uint64_t(bound) + 1) % bound;  // 2^64 mod bound
    for (;;) {
        uint64_t x = next();
        unsigned __int128 wide = static_cast<unsigned __int128>(x) * bound;
        if (static_cast<uint64_t>(wide) >= threshold)
            return static_cast<uint32_t>(wide >> 64);
    }
}

bool SplitMix64::chance(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return (next() >> 11) < p * 9007199254740992.0;  // 53-bit draw against p * 2^53
}

Graph random_graph(SplitMix64& rng, int order, double density, bool connected) {
    if (order < 0) throw std::invalid_argument("order must be nonnegative");
    if (density < 0.0 || density > 1.0) throw std::invalid_argument("density must be in [0,1]");
    std::vector<Edge> es;
    std::vector<std::vector<char>> have(order, std::vector<char>(order, 0));
    if (connected) {
        for (int v = 1; v < order; ++v) {
            int u = static_cast<int>(rng.below(static_cast<uint32_t>(v)));
            es.push_back(make_edge(u, v));
            have[u][v] = have[v][u] = 1;
        }
    }
    for (int u = 0; u < order; ++u)
        for (int v = u + 1; v < order; ++v) {
            if (have[u][v]) continue;
            if (rng.chance(density)) es.push_back({u, v});
        }
    return Graph(order, std::move(es));
}

namespace {

Graph random_member(SplitMix64& rng, int order, double density, MemberMode mode) {
    switch (mode) {
        case MemberMode::any:
            return random_graph(rng, order, density, false);
        case MemberMode::connected:
            return random_graph(rng, order, density, true);
        case MemberMode::delta_one: {
            Graph g = random_graph(rng, order, density, false);
            std::vector<Edge> es = g.edges();
            for (int v = 0; v < order; ++v) {
                if (g.degree(v) > 0) continue;
                int u = static_cast<int>(rng.below(static_cast<uint32_t>(order - 1)));
                if (u >= v) ++u;
                es.push_back(make_edge(u, v));
            }
            return Graph(order, std::move(es));
        }
        case MemberMode::nonbipartite_components: {
            Graph g = random_graph(rng, order, density, true);
            if (!g.is_bipartite()) return g;
            auto comp = components(g);
            const auto& sides = *comp.blocks[0].bipartition;
            const auto& big = sides.first.size() >= 2 ? sides.first : sides.second;
            int a = static_cast<int>(rng.below(static_cast<uint32_t>(big.size())));
            int b = static_cast<int>(rng.below(static_cast<uint32_t>(big.size() - 1)));
            if (b >= a) ++b;
            std::vector<Edge> es = g.edges();
            es.push_back(make_edge(big[a], big[b]));
            return Graph(order, std::move(es));
        }
    }
    throw std::logic_error("unhandled member mode");
}

int min_member_order(MemberMode mode) {
    switch (mode) {
        case MemberMode::any:
        case MemberMode::connected:
            return 1;
        case MemberMode::delta_one:
            return 2;
        case MemberMode::nonbipartite_components:
            return 3;
    }
    return 1;
}

}  // namespace

AnyInstance random_instance(uint64_t seed, const GenParams& params) {
    if (params.kind != ProductKind::otimes_h && params.kind != ProductKind::circ_h)
        throw std::invalid_argument("generator kinds are otimes_h and circ_h");
    if (params.base_order < 1) throw std::invalid_argument("base order must be positive");
    if (params.family_size < 1) throw std::invalid_argument("family size must be positive");
    if (params.edge_density < 0.0 || params.edge_density > 1.0)
        throw std::invalid_argument("density must be in [0,1]");
    int floor_order = min_member_order(params.member_mode);
    if (params.inner_order < floor_order)
        throw std::invalid_argument("member mode needs inner order at least " +
                                    std::to_string(floor_order));
    bool members_need_edges = params.member_mode == MemberMode::delta_one ||
                              params.member_mode == MemberMode::nonbipartite_components ||
                              (params.member_mode == MemberMode::connected &&
                               params.inner_order >= 2);
    if (params.edge_density == 0.0 &&
        (members_need_edges || (params.base_connected && params.base_order >= 2)))
        throw std::invalid_argument("edge density 0 cannot meet the structural constraints");

    SplitMix64 rng(seed);
    Graph base = random_graph(rng, params.base_order, params.edge_density, params.base_connected);
    bool shared = params.shared_inner || params.kind == ProductKind::otimes_h;
    std::vector<Graph> members;
    for (int i = 0; i < params.family_size; ++i) {
        int order = params.inner_order;
        if (!shared)
            order = floor_order +
                    static_cast<int>(rng.below(
                        static_cast<uint32_t>(params.inner_order - floor_order + 1)));
        members.push_back(random_member(rng, order, params.edge_density, params.member_mode));
    }
    GraphFamily fam(std::move(members));
    if (params.kind == ProductKind::otimes_h) {
        std::map<Edge, int> values;
        for (auto e : base.edges())
            values[e] = static_cast<int>(rng.below(static_cast<uint32_t>(params.family_size)));
        return OtimesInstance(std::move(base), std::move(fam),
                              EdgeAssignment(std::move(values)));
    }
    std::vector<int> values(base.order());
    for (int v = 0; v < base.order(); ++v)
        values[v] = static_cast<int>(rng.below(static_cast<uint32_t>(params.family_size)));
    return CircInstance(std::move(base), std::move(fam), VertexAssignment(std::move(values)));
}

}  // namespace gprod
