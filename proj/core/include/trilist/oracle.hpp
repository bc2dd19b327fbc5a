#ifndef TRILIST_ORACLE_HPP
#define TRILIST_ORACLE_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "trilist/graph.hpp"
#include "trilist/ordering.hpp"

namespace trilist {

// Exhaustive references for tests and gadget verification. Every function
// here fails loudly (GuardExceeded) instead of hanging when the instance is
// too large; guards are explicit parameters with safe defaults.

inline constexpr VertexId kBruteTriangleGuard = 500;
inline constexpr VertexId kExhaustiveOrderGuard = 11;
inline constexpr std::uint32_t kNaeGuard = 20;
inline constexpr std::uint32_t kSetCoverGuard = 20;

// Naive edge x common-neighbor enumeration; returns id-sorted triples in
// lexicographic order.
std::vector<std::array<VertexId, 3>> brute_triangles(
    const Graph& g, VertexId guard = kBruteTriangleGuard);

enum class CostKind { pm, pp };

struct ExhaustiveResult {
    std::uint64_t min_cost = 0;
    Ordering witness;
};

// Exact minimum of the order-induced cost over all n! orders, by lexicographic
// placement search with exact prefix costs. Pruning (on by default) never cuts
// the true optimum; prune=false explores every permutation and is used to
// validate the pruned search. weights applies only to CostKind::pp
// (per-vertex cost (out_degree + weight)^2) and must be empty for pm.
ExhaustiveResult min_cost_exhaustive(const Graph& g, CostKind kind,
                                     std::span<const std::uint64_t> weights = {},
                                     VertexId guard = kExhaustiveOrderGuard,
                                     bool prune = true);

// Not-all-equal 3-SAT with positive literals only.
struct NaeFormula {
    std::uint32_t n_vars = 0;
    std::vector<std::array<std::uint32_t, 3>> clauses;  // 1-based, distinct per clause

    // Checks index range and per-clause distinctness.
    void validate() const;
};

// Text format: first line "n m", then m lines "a b c".
NaeFormula parse_nae_formula(std::istream& in);
NaeFormula parse_nae_formula_file(const std::string& path);

// True iff some assignment leaves every clause with at least one true and one
// false literal. Exhaustive over 2^n_vars assignments.
bool nae_satisfiable(const NaeFormula& f, std::uint32_t guard = kNaeGuard);

struct SetCoverInstance {
    std::uint32_t universe_size = 0;              // elements are 1..n
    std::uint32_t budget = 0;                     // k
    std::vector<std::vector<std::uint32_t>> sets; // each sorted ascending

    // Checks element range, coverage of the universe, |sets| >= budget.
    void validate() const;
};

// Text format: first line "n k", then one non-blank line per set listing its
// elements ('#' comments allowed).
SetCoverInstance parse_set_cover(std::istream& in);
SetCoverInstance parse_set_cover_file(const std::string& path);

// Raised when the instance's universe cannot be covered at all (violates the
// non-triviality precondition); distinct from GuardExceeded.
class UncoverableUniverse : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exact minimum cover cardinality by subset enumeration.
std::uint32_t min_set_cover(const SetCoverInstance& inst,
                            std::uint32_t guard = kSetCoverGuard);

}  // namespace trilist

#endif  // TRILIST_ORACLE_HPP
