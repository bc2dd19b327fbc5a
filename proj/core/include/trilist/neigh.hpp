#ifndef TRILIST_NEIGH_HPP
#define TRILIST_NEIGH_HPP

#include <cstdint>
#include <functional>

#include "trilist/graph.hpp"
#include "trilist/ordering.hpp"

namespace trilist {

struct NeighOptions {
    // Stop when a sweep improves c_pm by less than epsilon relative.
    double epsilon = 1e-2;
    // Hard safety cap on sweeps.
    std::uint32_t max_sweeps = 50;
};

struct NeighResult {
    Ordering ordering;
    std::uint32_t sweeps = 0;
    std::uint64_t initial_cpm = 0;
    std::uint64_t final_cpm = 0;
};

// Test/diagnostic hook, called after every accepted relocation with the moved
// vertex, the maintained c_pm, and the ordering materialized at that point.
// Materialization is O(n) per call; leave empty outside tests.
using RelocationHook =
    std::function<void(VertexId moved, std::uint64_t cpm, const Ordering& current)>;

// Greedy per-vertex reordering: each sweep considers every vertex in id order
// and moves it among its neighbors to the position minimizing c_pm. A vertex
// is relocated only when the best position strictly improves the cost, so
// c_pm is non-increasing move by move and a local optimum is returned intact.
NeighResult neigh_optimize(const Graph& g, const Ordering& initial,
                           const NeighOptions& options = {},
                           const RelocationHook& hook = {});

Ordering neigh_order(const Graph& g, const Ordering& initial,
                     double epsilon = 1e-2, std::uint32_t max_sweeps = 50);
// Default start: split_order(g).
Ordering neigh_order(const Graph& g);

}  // namespace trilist

#endif  // TRILIST_NEIGH_HPP
