#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gprod/family.hpp"
#include "gprod/product.hpp"

namespace gprod {

// A factorization of a simple graph as an edge-indexed product. blocks is a
// balanced partition of the vertex set; bijections[i][s] is the image in
// blocks[i] of the s-th smallest vertex of blocks[0]. The rebuilt instance
// lives on base vertex i with inner vertices 0..q-1, and product vertex
// i*q+s maps back to bijections[i][s].
struct Decomposition {
    Graph base;
    GraphFamily family;
    EdgeAssignment assignment;
    std::vector<std::vector<int>> blocks;
    std::vector<std::vector<int>> bijections;

    OtimesInstance instance() const { return OtimesInstance(base, family, assignment); }
    std::vector<int> reconstruction() const;
};

// Original-graph relabeling of the rebuilt product; equals the decomposed
// graph whenever the decomposition is valid.
Graph reconstructed_graph(const Decomposition& d);

struct ConditionViolation {
    int i = 0, j = 0, u = 0, v = 0;  // blocks i<j, domain positions u<=v
};

struct DecompositionCheckResult {
    bool ok = false;
    std::string reason;  // empty when ok
    std::optional<ConditionViolation> violation;
};

// Validates blocks/bijections as a factorization witness for g. Without
// loop_mode the blocks must be independent and same-position cross pairs
// must be non-edges; with loop_mode those edges are carried by base loops
// and member loops instead.
DecompositionCheckResult check_decomposition(const Graph& g,
                                             const std::vector<std::vector<int>>& blocks,
                                             const std::vector<std::vector<int>>& bijections,
                                             bool loop_mode = false);

// Assembles the base, family and assignment from a witness already accepted
// by check_decomposition.
Decomposition build_decomposition(const Graph& g,
                                  const std::vector<std::vector<int>>& blocks,
                                  const std::vector<std::vector<int>>& bijections,
                                  bool loop_mode = false);

struct DecomposeStats {
    long long partitions_tried = 0;
    long long assignment_nodes = 0;
};

// First factorization of g into k equal blocks in canonical order, if any.
// Partitions are enumerated with blocks ordered by their minima and the
// first block's mate assignments tried in ascending order, so the result is
// deterministic.
std::optional<Decomposition> decompose(const Graph& g, int k, bool loop_mode = false,
                                       int guard = 12, DecomposeStats* stats = nullptr);

// Regrouping identities. Product vertex ((alpha,a),x) of the grouped form
// and (alpha,(a,x)) of the flat form carry the same numeric id, so the two
// sides agree as labeled graphs, not merely up to isomorphism.

// g x (H (x)_h Gamma) as an instance over the base g x H.
OtimesInstance assoc_otimes_left(const Graph& g, const OtimesInstance& inst);

// First (alpha, beta, a, b) with mismatched members on (alpha,a)(beta,b) and
// (alpha,b)(beta,a), if any. inst.base() must equal the direct product of g
// and h.
std::optional<std::array<int, 4>> otimes_symmetry_violation(const Graph& g, const Graph& h,
                                                            const OtimesInstance& inst);

// (g x h) (x)_h'' Gamma regrouped as an instance over g whose members are
// the per-edge products h (x) Gamma. Requires the symmetry above.
OtimesInstance assoc_otimes_right(const Graph& g, const Graph& h, const OtimesInstance& inst);

// g o (H o_h Gamma) as an instance over the base g o H.
CircInstance assoc_circ_left(const Graph& g, const CircInstance& inst);

// (g o h) o_h'' Gamma regrouped as an instance over g whose fibers are the
// per-vertex products h o Gamma. No side condition is needed.
CircInstance assoc_circ_right(const Graph& g, const Graph& h, const CircInstance& inst);

}  // namespace gprod
