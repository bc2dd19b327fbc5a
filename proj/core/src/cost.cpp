#include "trilist/cost.hpp"

#include <stdexcept>

namespace trilist {

CostReport cost_report(const Graph& g, const Ordering& pi) {
    if (pi.size() != g.vertex_count())
        throw std::invalid_argument("cost_report: ordering does not match graph");
    CostReport report;
    const auto ranks = pi.ranks();
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        const VertexId ru = ranks[u];
        std::uint64_t out = 0;
        for (const VertexId v : g.neighbors(u))
            if (ru < ranks[v]) ++out;
        const std::uint64_t deg = g.degree(u);
        const std::uint64_t in = deg - out;
        report.c_pp += out * out;
        report.c_pm += out * in;
        report.c_mm += in * in;
        report.sum_deg_sq += deg * deg;
    }
    return report;
}

CostReport cost_report(const OrientedView& view) {
    CostReport report;
    for (VertexId u = 0; u < view.vertex_count(); ++u) {
        const std::uint64_t out = view.out_degree(u);
        const std::uint64_t in = view.in_degree(u);
        report.c_pp += out * out;
        report.c_pm += out * in;
        report.c_mm += in * in;
        report.sum_deg_sq += (out + in) * (out + in);
    }
    return report;
}

}  // namespace trilist
