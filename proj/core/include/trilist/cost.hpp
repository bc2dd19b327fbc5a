#ifndef TRILIST_COST_HPP
#define TRILIST_COST_HPP

#include <cstdint>

#include "trilist/graph.hpp"
#include "trilist/ordering.hpp"
#include "trilist/oriented_view.hpp"

namespace trilist {

// Order-induced operation counts. c_pp and c_pm are the exact innermost-loop
// work of the two listing algorithms; c_mm and sum_deg_sq close the identity
// c_pp + 2*c_pm + c_mm = sum_deg_sq.
struct CostReport {
    std::uint64_t c_pp = 0;        // sum over u of out_degree(u)^2
    std::uint64_t c_pm = 0;        // sum over u of out_degree(u) * in_degree(u)
    std::uint64_t c_mm = 0;        // sum over u of in_degree(u)^2
    std::uint64_t sum_deg_sq = 0;  // sum over u of degree(u)^2, order-independent
};

CostReport cost_report(const Graph& g, const Ordering& pi);
CostReport cost_report(const OrientedView& view);

}  // namespace trilist

#endif  // TRILIST_COST_HPP
