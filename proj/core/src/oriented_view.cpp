#include "trilist/oriented_view.hpp"

#include <stdexcept>

namespace trilist {

OrientedView::OrientedView(const Graph& g, const Ordering& pi) {
    if (pi.size() != g.vertex_count())
        throw std::invalid_argument("orient: ordering does not match graph");

    n_ = g.vertex_count();
    m_ = g.edge_count();
    rank_.assign(pi.ranks().begin(), pi.ranks().end());
    inverse_.assign(pi.sequence().begin(), pi.sequence().end());

    succ_offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
    pred_offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (VertexId u = 0; u < n_; ++u) {
        const VertexId ru = rank_[u];
        for (const VertexId v : g.neighbors(u)) {
            if (ru < rank_[v])
                ++succ_offsets_[u + 1];
            else
                ++pred_offsets_[u + 1];
        }
    }
    for (VertexId u = 0; u < n_; ++u) {
        succ_offsets_[u + 1] += succ_offsets_[u];
        pred_offsets_[u + 1] += pred_offsets_[u];
    }

    // Visiting vertices by ascending rank appends neighbors in rank order,
    // which the listing loops rely on.
    succ_.resize(m_);
    pred_.resize(m_);
    std::vector<std::uint64_t> succ_cursor(succ_offsets_.begin(), succ_offsets_.end() - 1);
    std::vector<std::uint64_t> pred_cursor(pred_offsets_.begin(), pred_offsets_.end() - 1);
    for (VertexId r = 0; r < n_; ++r) {
        const VertexId v = inverse_[r];
        for (const VertexId u : g.neighbors(v)) {
            if (rank_[u] < r)
                succ_[succ_cursor[u]++] = v;  // v is a successor of u
            else
                pred_[pred_cursor[u]++] = v;  // v is a predecessor of u
        }
    }
}

}  // namespace trilist
