#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "gprod/family.hpp"
#include "gprod/product.hpp"

namespace gprod {

using AnyInstance = std::variant<OtimesInstance, CircInstance>;

// JSON forms. Serialization is canonical: keys are alphabetical, edges are
// in canonical order, "loops" appears only when the graph allows loops.
// Parsing rejects unknown fields by name; parse then serialize is the
// identity on canonical documents.
std::string serialize_graph(const Graph& g);
Graph parse_graph(const std::string& text);

std::string serialize_otimes(const OtimesInstance& inst);
std::string serialize_circ(const CircInstance& inst);
std::string serialize_instance(const AnyInstance& inst);
AnyInstance parse_instance(const std::string& text);

// Plain text form: "order edge_count" then one "u v" line per edge. Carries
// no loop flag; a graph with loop edges round-trips as loop-allowing.
std::string format_edge_list(const Graph& g);
Graph parse_edge_list(const std::string& text);

// Deterministic generator. The state walk is the splitmix64 sequence;
// bounded draws use the Lemire rejection method, so a fixed seed yields the
// same stream on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}
    uint64_t next();
    uint32_t below(uint32_t bound);  // uniform in [0, bound), bound >= 1
    bool chance(double p);

private:
    uint64_t state_;
};

enum class MemberMode { any, connected, delta_one, nonbipartite_components };

struct GenParams {
    ProductKind kind = ProductKind::otimes_h;  // otimes_h or circ_h
    int base_order = 4;
    int inner_order = 4;
    double edge_density = 0.5;
    int family_size = 2;
    MemberMode member_mode = MemberMode::any;
    bool base_connected = true;
    bool shared_inner = true;  // vertex-indexed instances may mix orders when false
};

Graph random_graph(SplitMix64& rng, int order, double density, bool connected);
AnyInstance random_instance(uint64_t seed, const GenParams& params);

}  // namespace gprod
