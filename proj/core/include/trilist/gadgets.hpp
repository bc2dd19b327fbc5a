#ifndef TRILIST_GADGETS_HPP
#define TRILIST_GADGETS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "trilist/graph.hpp"
#include "trilist/oracle.hpp"
#include "trilist/ordering.hpp"

namespace trilist {

struct WeightedGraph {
    Graph graph;
    std::vector<std::uint64_t> weights;  // one non-negative weight per vertex
};

// Per-vertex elimination costs out_degree(u) + weight(u) under an order. The
// multiset size is always n and its linear cost m + sum(weights), independent
// of the order.
class CostMultiset {
public:
    explicit CostMultiset(std::vector<std::uint64_t> costs);

    const std::vector<std::uint64_t>& values() const { return costs_; }
    std::size_t size() const { return costs_.size(); }
    std::uint64_t linear_cost() const;
    std::uint64_t squared_cost() const;
    // Excess above the balanced d/(d+1) distribution with the same size and
    // linear cost: with linear = n*d + v, 1 <= v <= n, the marginal cost is
    // sum over values u of max(0, u - (d+1)).
    std::uint64_t marginal_cost() const;

private:
    std::vector<std::uint64_t> costs_;  // sorted ascending
};

CostMultiset multiset_costs(const WeightedGraph& wg, const Ordering& pi);

// sum over u of (out_degree(u) + weight(u))^2 under the orientation induced
// by pi; equals c_pp for all-zero weights.
std::uint64_t weighted_cost(const WeightedGraph& wg, const Ordering& pi);

// A constructed reduction graph with per-vertex role labels and the companion
// constants of its construction.
struct LabeledGadget {
    WeightedGraph weighted;          // weights all zero for unweighted gadgets
    std::vector<std::string> roles;  // one label per vertex, e.g. "X1", "L2^3", "A"
    std::uint64_t threshold = 0;     // nae: 2*#clauses; ld: reference cost; setcover: V
    std::uint32_t d = 0;             // ld size / setcover degree parameter
};

// Dense id of the unique vertex with the given role.
VertexId find_role(const LabeledGadget& gadget, std::string_view role);

// Satisfiability gadget: one triangle L_j^1,L_j^2,L_j^3 per clause, one X_i
// per variable, an edge {X_i, L_j^a} per literal occurrence. The formula is
// not-all-equal satisfiable iff some order has pm-cost <= 2*#clauses.
LabeledGadget nae_graph(const NaeFormula& f);

// Clique-plus-fan graph on 2d+2 vertices simulating a unit vertex weight:
// a (d+1)-clique K_0..K_d, fan vertices v_1..v_d adjacent to every clique
// vertex, and one vertex e adjacent to all v_i.
LabeledGadget ld_gadget(std::uint32_t d);

// Optimal pp-cost of ld_gadget(d): d^2 + d*(d+1)^2 + sum of i^2 for i in 0..d,
// achieved by the order e, v_1..v_d, K_d..K_0.
std::uint64_t ld_reference_cost(std::uint32_t d);

// Weighted-pp instance encoding a Set Cover question: minimum weighted cost
// <= threshold iff the universe has a cover of size <= budget. The degree
// parameter defaults to the smallest d with d > #sets and d > 2*|S_j| for
// all j; any larger d is admissible and yields an equivalent instance.
LabeledGadget setcover_graph(const SetCoverInstance& inst, std::uint32_t d_override = 0);

struct GadgetAttachment {
    VertexId target = 0;       // original vertex whose weight was decremented
    std::uint32_t d = 0;       // size of the attached gadget
    VertexId e_vertex = 0;     // the gadget vertex joined to target
};

struct WeightlessReduction {
    Graph graph;
    std::uint64_t cost_offset = 0;  // accumulated reference costs
    std::vector<GadgetAttachment> attachments;
};

// Replaces each weight unit on a vertex u (current degree + remaining weight
// = d) by a fresh ld_gadget(d) joined to u through its e vertex. The minimum
// weightless pp-cost of the result equals the minimum weighted pp-cost of the
// input plus cost_offset.
WeightlessReduction weighted_to_weightless(const WeightedGraph& wg,
                                           VertexId max_vertices = 4096);

// Sidecar format: one "original_label role weight" line per vertex.
void write_gadget(const LabeledGadget& gadget, std::ostream& edges_out,
                  std::ostream& labels_out);
// Rebuilds a weighted graph from the edge list plus sidecar; vertices that
// appear only in the sidecar are kept as isolated vertices. Roles, when
// requested, are returned through *roles.
WeightedGraph read_weighted_graph(std::istream& edges_in, std::istream& labels_in,
                                  std::vector<std::string>* roles = nullptr);

}  // namespace trilist

#endif  // TRILIST_GADGETS_HPP
