#ifndef TRILIST_GRAPH_HPP
#define TRILIST_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "trilist/common.hpp"

namespace trilist {

using LabeledEdge = std::pair<std::int64_t, std::int64_t>;

// Immutable undirected simple graph in compressed sorted-adjacency form.
// Vertices are dense ids in [0, n); the original input labels are kept in a
// sorted table so results can be reported in the input's vocabulary.
class Graph {
public:
    Graph() = default;

    // Build from already-dense edges. Rejects loops, duplicates and ids >= n.
    // labels, when given, must be strictly increasing with one entry per
    // vertex; by default vertex u is labeled u.
    static Graph from_dense_edges(VertexId n,
                                  std::vector<std::pair<VertexId, VertexId>> edges,
                                  std::vector<std::int64_t> labels = {});

    VertexId vertex_count() const { return n_; }
    std::uint64_t edge_count() const { return m_; }

    std::span<const VertexId> neighbors(VertexId u) const {
        return {adjacency_.data() + offsets_[u],
                adjacency_.data() + offsets_[u + 1]};
    }
    VertexId degree(VertexId u) const {
        return static_cast<VertexId>(offsets_[u + 1] - offsets_[u]);
    }
    bool has_edge(VertexId u, VertexId v) const;
    VertexId max_degree() const;
    std::uint64_t sum_degree_squares() const;

    std::int64_t label_of(VertexId u) const { return labels_[u]; }
    const std::vector<std::int64_t>& labels() const { return labels_; }
    // Dense id for an original label, or kInvalidVertex if unknown.
    VertexId dense_id(std::int64_t label) const;

    // One entry per undirected edge, as original labels, smaller label first.
    std::vector<LabeledEdge> labeled_edges() const;

    // Throws std::logic_error if any structural invariant is broken.
    void check_invariants() const;

private:
    VertexId n_ = 0;
    std::uint64_t m_ = 0;
    std::vector<std::uint64_t> offsets_;  // n+1 entries
    std::vector<VertexId> adjacency_;     // 2m entries, each list strictly increasing
    std::vector<std::int64_t> labels_;    // dense id -> original label, ascending
};

struct NormalizeStats {
    std::uint64_t loops_removed = 0;
    std::uint64_t duplicates_removed = 0;
};

// Clean a raw labeled edge list: drop loops, merge duplicates (including the
// reversed copy of an edge), re-index the surviving labels densely in
// ascending order. Vertices that only appear in loops are dropped.
Graph normalize(std::span<const LabeledEdge> raw_edges,
                NormalizeStats* stats = nullptr);

// Text edge list: one "u v" pair per line, any run of spaces/tabs as
// separator, '#'-prefixed comment lines and blank lines ignored, CRLF
// tolerated. Throws ParseError with the offending line number.
Graph load_edgelist(std::istream& in, NormalizeStats* stats = nullptr);
Graph load_edgelist_file(const std::string& path, NormalizeStats* stats = nullptr);

void write_edgelist(const Graph& g, std::ostream& out);
void write_edgelist_file(const Graph& g, const std::string& path);

// Uniform simple graph with exactly n vertices and m edges, reproducible for
// a fixed seed. Throws std::invalid_argument when m > n(n-1)/2.
Graph gen_gnm(VertexId n, std::uint64_t m, std::uint64_t seed);

}  // namespace trilist

#endif  // TRILIST_GRAPH_HPP
