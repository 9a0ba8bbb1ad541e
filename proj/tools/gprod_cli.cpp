#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gprod/connectivity.hpp"
#include "gprod/invariants.hpp"
#include "gprod/io.hpp"
#include "gprod/product.hpp"
#include "gprod/structure.hpp"
#include "gprod/verify.hpp"

namespace {

using nlohmann::json;
using namespace gprod;

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph load_graph(const std::string& path, const std::string& format) {
    std::string text = slurp(path);
    if (format == "edgelist") return parse_edge_list(text);
    return parse_graph(text);
}

json graph_json(const Graph& g) { return json::parse(serialize_graph(g)); }

json instance_json(const AnyInstance& inst) { return json::parse(serialize_instance(inst)); }

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

int run_product(const std::string& input, const std::string& format) {
    AnyInstance inst = parse_instance(slurp(input));
    ProductGraph p = std::holds_alternative<OtimesInstance>(inst)
                         ? otimes_h(std::get<OtimesInstance>(inst))
                         : circ_h(std::get<CircInstance>(inst));
    if (format == "edgelist") {
        std::cout << format_edge_list(p.graph());
        return 0;
    }
    json out;
    out["kind"] = to_string(p.kind());
    out["order"] = p.order();
    out["base_order"] = p.base_order();
    json sizes = json::array();
    for (int a = 0; a < p.base_order(); ++a) sizes.push_back(p.fiber_size(a));
    out["fiber_sizes"] = std::move(sizes);
    out["graph"] = graph_json(p.graph());
    emit(out);
    return 0;
}

json verdict_json(const ConnectivityVerdict& v) {
    json out;
    out["connected"] = v.connected;
    out["component_count"] = v.component_count;
    out["method"] = v.method;
    if (!v.connected) out["witness"] = v.witness;
    return out;
}

json partition_witness_json(const PartitionWitness& w) {
    json out;
    out["common_union"] = w.common_union;
    out["subfamilies"] = w.subfamilies;
    return out;
}

int run_connect(const std::string& input, std::string method) {
    AnyInstance inst = parse_instance(slurp(input));
    bool is_otimes = std::holds_alternative<OtimesInstance>(inst);
    if (method == "auto") method = is_otimes ? "fiber" : "bfs";
    if (!is_otimes && method != "bfs") {
        std::cerr << "method " << method << " applies to edge-indexed instances only\n";
        return 2;
    }
    if (method == "bfs") {
        Graph p = is_otimes ? otimes_h(std::get<OtimesInstance>(inst)).graph()
                            : circ_h(std::get<CircInstance>(inst)).graph();
        emit(verdict_json(bfs_connectivity(p)));
        return 0;
    }
    const OtimesInstance& oi = std::get<OtimesInstance>(inst);
    if (method == "fiber") {
        emit(verdict_json(otimes_connected_via_family(oi)));
        return 0;
    }
    if (method == "bipartite") {
        emit(verdict_json(predict_otimes_connectivity(oi)));
        return 0;
    }
    if (method == "partitions") {
        auto w = predict_disconnection_via_partitions(oi);
        json out;
        out["method"] = "partitions";
        out["connected"] = !w.has_value();
        if (w) out["witness"] = partition_witness_json(*w);
        emit(out);
        return 0;
    }
    if (method == "sufficient") {
        auto cert = sufficient_connectivity_check(oi);
        json out;
        out["method"] = "sufficient";
        out["certified"] = false;
        if (cert) {
            out["certified"] = true;
            json c;
            switch (cert->kind) {
                case SufficiencyCertificate::Kind::one_edge:
                    c["kind"] = "one-edge";
                    break;
                case SufficiencyCertificate::Kind::two_edge_nonbip:
                    c["kind"] = "two-edge-nonbipartite";
                    break;
                case SufficiencyCertificate::Kind::two_edge_bipartite:
                    c["kind"] = "two-edge-bipartite";
                    break;
            }
            c["edge1"] = {cert->e1.first, cert->e1.second};
            if (cert->kind != SufficiencyCertificate::Kind::one_edge) {
                c["edge2"] = {cert->e2.first, cert->e2.second};
                c["shared_vertex"] = cert->shared_vertex;
                c["component_index"] = cert->component_index;
            }
            if (cert->side >= 0) c["side"] = cert->side;
            out["certificate"] = std::move(c);
        }
        emit(out);
        return 0;
    }
    std::cerr << "unknown method " << method << '\n';
    return 2;
}

int run_invariant(const std::string& input, int guard) {
    AnyInstance inst = parse_instance(slurp(input));
    json out;
    json skipped = json::object();
    if (std::holds_alternative<OtimesInstance>(inst)) {
        const OtimesInstance& oi = std::get<OtimesInstance>(inst);
        out["kind"] = "otimes";
        out["alpha_lower"] = alpha_otimes_lower(oi, guard);
        auto gl = gamma_otimes_lower(oi, guard);
        out["gamma_lower"] = {{"bound", gl.bound}, {"union_bound", gl.union_bound}};
        auto cb = chi_omega_otimes_bounds(oi, guard);
        out["chi_bound"] = cb.chi_bound;
        out["omega_bound"] = cb.omega_bound;
        Graph p = otimes_h(oi).graph();
        if (p.order() <= guard) {
            json exact;
            exact["alpha"] = alpha_exact(p, guard).value;
            exact["omega"] = omega_exact(p, guard).value;
            exact["chi"] = chi_exact(p, guard).value;
            exact["gamma"] = gamma_exact(p, guard).value;
            if (p.min_degree() >= 1) exact["gamma_t"] = gamma_t_exact(p, guard).value;
            out["exact"] = std::move(exact);
        } else {
            skipped["exact"] = "product order exceeds the guard";
        }
    } else {
        const CircInstance& ci = std::get<CircInstance>(inst);
        out["kind"] = "circ";
        auto a = alpha_circ(ci, guard);
        out["alpha"] = {{"value", a.value},
                        {"hypothesis_met", a.hypothesis_met},
                        {"base_set", a.base_set}};
        auto gu = gamma_circ_upper(ci, guard);
        out["gamma_upper"] = {{"value", gu.value}, {"base_set", gu.base_set}};
        out["chi_upper"] = chi_circ_upper(ci, guard);
        try {
            out["kappa"] = kappa_circ(ci);
        } catch (const precondition_error& e) {
            skipped["kappa"] = e.what();
        }
        try {
            out["lambda"] = lambda_circ(ci);
        } catch (const precondition_error& e) {
            skipped["lambda"] = e.what();
        }
        try {
            out["min_degree"] = min_degree_circ(ci);
        } catch (const precondition_error& e) {
            skipped["min_degree"] = e.what();
        }
        Graph p = circ_h(ci).graph();
        if (p.order() <= guard) {
            json exact;
            exact["alpha"] = alpha_exact(p, guard).value;
            exact["omega"] = omega_exact(p, guard).value;
            exact["chi"] = chi_exact(p, guard).value;
            exact["gamma"] = gamma_exact(p, guard).value;
            out["exact"] = std::move(exact);
        } else {
            skipped["exact"] = "product order exceeds the guard";
        }
    }
    if (!skipped.empty()) out["skipped"] = std::move(skipped);
    emit(out);
    return 0;
}

int run_kappa(const std::string& path, const std::string& format) {
    Graph g = load_graph(path, format);
    auto cut = kappa_exact(g);
    json out;
    out["kappa"] = cut.value;
    out["cut"] = cut.vertices;
    emit(out);
    return 0;
}

int run_lambda(const std::string& path, const std::string& format) {
    Graph g = load_graph(path, format);
    auto cut = lambda_exact(g);
    json out;
    out["lambda"] = cut.value;
    json edges = json::array();
    for (auto [u, v] : cut.edges) edges.push_back(json::array({u, v}));
    out["cut"] = std::move(edges);
    emit(out);
    return 0;
}

int run_decompose(const std::string& path, const std::string& format, int k, bool loops,
                  int guard) {
    Graph g = load_graph(path, format);
    DecomposeStats stats;
    auto d = decompose(g, k, loops, guard, &stats);
    json out;
    out["found"] = d.has_value();
    out["stats"] = {{"partitions_tried", stats.partitions_tried},
                    {"assignment_nodes", stats.assignment_nodes}};
    if (d) {
        out["base"] = graph_json(d->base);
        json fam = json::array();
        for (int i = 0; i < d->family.size(); ++i) fam.push_back(graph_json(d->family.member(i)));
        out["family"] = std::move(fam);
        json asg = json::object();
        for (const auto& [e, idx] : d->assignment.values())
            asg[std::to_string(e.first) + "-" + std::to_string(e.second)] = idx;
        out["assignment"] = std::move(asg);
        out["blocks"] = d->blocks;
        out["bijections"] = d->bijections;
        out["reconstruction"] = d->reconstruction();
    }
    emit(out);
    return 0;
}

int run_verify(const std::string& suite, uint64_t seeds, uint64_t seed_start) {
    std::vector<std::string> chosen;
    if (suite == "all")
        chosen = suite_names();
    else
        chosen.push_back(suite);
    json out;
    json arr = json::array();
    bool passed = true;
    for (const auto& name : chosen) {
        SuiteResult res = run_suite(name, seed_start, seed_start + seeds);
        std::cerr << name << ": " << res.checked << " checked, " << res.skipped << " skipped, "
                  << res.violations.size() << " violations\n";
        json s;
        s["suite"] = res.suite;
        s["checked"] = res.checked;
        s["skipped"] = res.skipped;
        json viol = json::array();
        for (const auto& v : res.violations) {
            json one;
            one["seed"] = v.seed;
            one["details"] = v.details;
            if (!v.instance_doc.empty()) one["instance"] = json::parse(v.instance_doc);
            viol.push_back(std::move(one));
        }
        s["violations"] = std::move(viol);
        arr.push_back(std::move(s));
        passed = passed && res.passed();
    }
    out["suites"] = std::move(arr);
    out["passed"] = passed;
    emit(out);
    return passed ? 0 : 1;
}

int run_gen(uint64_t seed, const std::string& kind, int base_order, int inner_order,
            double density, int family_size, const std::string& mode, bool disconnected_base,
            bool mixed_inner) {
    GenParams p;
    if (kind == "otimes")
        p.kind = ProductKind::otimes_h;
    else if (kind == "circ")
        p.kind = ProductKind::circ_h;
    else
        throw std::invalid_argument("kind must be otimes or circ");
    p.base_order = base_order;
    p.inner_order = inner_order;
    p.edge_density = density;
    p.family_size = family_size;
    if (mode == "any")
        p.member_mode = MemberMode::any;
    else if (mode == "connected")
        p.member_mode = MemberMode::connected;
    else if (mode == "delta-one")
        p.member_mode = MemberMode::delta_one;
    else if (mode == "nonbipartite")
        p.member_mode = MemberMode::nonbipartite_components;
    else
        throw std::invalid_argument("member mode must be any, connected, delta-one, or nonbipartite");
    p.base_connected = !disconnected_base;
    p.shared_inner = !mixed_inner;
    emit(instance_json(random_instance(seed, p)));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized graph products: construction, connectivity, invariants"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string graph_path = "-";
    std::string format = "json";
    std::string method = "auto";
    std::string suite = "all";
    std::string kind = "otimes";
    std::string mode = "any";
    int guard = 20;
    int blocks = 2;
    bool loops = false;
    bool disconnected_base = false;
    bool mixed_inner = false;
    uint64_t seed = 0, seeds = 100, seed_start = 0;
    int base_order = 4, inner_order = 4, family_size = 2;
    double density = 0.5;

    auto* product = app.add_subcommand("product", "build the product graph of an instance");
    product->add_option("-i,--input", input, "instance file, - for stdin");
    product->add_option("--format", format, "output format: json or edgelist")
        ->check(CLI::IsMember({"json", "edgelist"}));

    auto* connect = app.add_subcommand("connect", "decide connectivity of the product");
    connect->add_option("-i,--input", input, "instance file, - for stdin");
    connect->add_option("--method", method,
                        "auto, bfs, fiber, bipartite, partitions, or sufficient");

    auto* invariant = app.add_subcommand("invariant", "bounds and exact invariants");
    invariant->add_option("-i,--input", input, "instance file, - for stdin");
    invariant->add_option("--guard", guard, "largest order the exact solvers accept");

    auto* kappa = app.add_subcommand("kappa", "vertex connectivity of a graph");
    kappa->add_option("-g,--graph", graph_path, "graph file, - for stdin");
    kappa->add_option("--format", format, "input format: json or edgelist")
        ->check(CLI::IsMember({"json", "edgelist"}));

    auto* lambda = app.add_subcommand("lambda", "edge connectivity of a graph");
    lambda->add_option("-g,--graph", graph_path, "graph file, - for stdin");
    lambda->add_option("--format", format, "input format: json or edgelist")
        ->check(CLI::IsMember({"json", "edgelist"}));

    auto* decomp = app.add_subcommand("decompose", "factor a graph as an edge-indexed product");
    decomp->add_option("-g,--graph", graph_path, "graph file, - for stdin");
    decomp->add_option("--format", format, "input format: json or edgelist")
        ->check(CLI::IsMember({"json", "edgelist"}));
    decomp->add_option("-k,--blocks", blocks, "number of blocks")->required();
    decomp->add_flag("--loops", loops, "allow base and member loops");
    decomp->add_option("--guard", guard, "largest order the search accepts");

    auto* verify = app.add_subcommand("verify", "randomized cross-checks against brute force");
    verify->add_option("--suite", suite, "suite name or all");
    verify->add_option("--seeds", seeds, "number of seeds per suite");
    verify->add_option("--seed-start", seed_start, "first seed");

    auto* gen = app.add_subcommand("gen", "generate a random instance");
    gen->add_option("--seed", seed, "generator seed");
    gen->add_option("--kind", kind, "otimes or circ");
    gen->add_option("--base-order", base_order, "base graph order");
    gen->add_option("--inner-order", inner_order, "member order (largest, when mixed)");
    gen->add_option("--density", density, "edge probability in [0,1]");
    gen->add_option("--family-size", family_size, "number of members");
    gen->add_option("--member-mode", mode, "any, connected, delta-one, or nonbipartite");
    gen->add_flag("--disconnected-base", disconnected_base, "do not force a connected base");
    gen->add_flag("--mixed-inner", mixed_inner, "vertex-indexed members of varied orders");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (product->parsed()) return run_product(input, format);
        if (connect->parsed()) return run_connect(input, method);
        if (invariant->parsed()) return run_invariant(input, guard);
        if (kappa->parsed()) return run_kappa(graph_path, format);
        if (lambda->parsed()) return run_lambda(graph_path, format);
        if (decomp->parsed()) return run_decompose(graph_path, format, blocks, loops, guard);
        if (verify->parsed()) return run_verify(suite, seeds, seed_start);
        if (gen->parsed())
            return run_gen(seed, kind, base_order, inner_order, density, family_size, mode,
                           disconnected_base, mixed_inner);
    } catch (const precondition_error& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
