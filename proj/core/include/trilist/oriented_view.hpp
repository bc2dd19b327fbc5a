#ifndef TRILIST_ORIENTED_VIEW_HPP
#define TRILIST_ORIENTED_VIEW_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "trilist/graph.hpp"
#include "trilist/ordering.hpp"

namespace trilist {

// Acyclic orientation of a graph induced by an ordering: every undirected
// edge points from the lower-ranked endpoint to the higher-ranked one. Each
// neighborhood is partitioned into predecessors and successors, both stored
// rank-ascending. Self-contained and immutable, safe to share across threads.
class OrientedView {
public:
    OrientedView(const Graph& g, const Ordering& pi);

    VertexId vertex_count() const { return n_; }
    std::uint64_t edge_count() const { return m_; }

    std::span<const VertexId> successors(VertexId u) const {
        return {succ_.data() + succ_offsets_[u], succ_.data() + succ_offsets_[u + 1]};
    }
    std::span<const VertexId> predecessors(VertexId u) const {
        return {pred_.data() + pred_offsets_[u], pred_.data() + pred_offsets_[u + 1]};
    }
    VertexId out_degree(VertexId u) const {
        return static_cast<VertexId>(succ_offsets_[u + 1] - succ_offsets_[u]);
    }
    VertexId in_degree(VertexId u) const {
        return static_cast<VertexId>(pred_offsets_[u + 1] - pred_offsets_[u]);
    }

    VertexId rank_of(VertexId v) const { return rank_[v]; }
    VertexId vertex_at(VertexId position) const { return inverse_[position]; }

private:
    VertexId n_ = 0;
    std::uint64_t m_ = 0;
    std::vector<std::uint64_t> succ_offsets_, pred_offsets_;
    std::vector<VertexId> succ_, pred_;
    std::vector<VertexId> rank_, inverse_;
};

inline OrientedView orient(const Graph& g, const Ordering& pi) {
    return OrientedView(g, pi);
}

}  // namespace trilist

#endif  // TRILIST_ORIENTED_VIEW_HPP
