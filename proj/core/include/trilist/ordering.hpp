#ifndef TRILIST_ORDERING_HPP
#define TRILIST_ORDERING_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "trilist/graph.hpp"

namespace trilist {

// Bijective rank assignment over the vertices of a graph. Ranks are 0-based
// internally; the text format uses 1..n.
class Ordering {
public:
    Ordering() = default;

    static Ordering identity(VertexId n);
    // ranks[v] = position of v; must be a permutation of [0, n).
    static Ordering from_ranks(std::vector<VertexId> ranks);
    // order[i] = vertex at position i; must be a permutation of [0, n).
    static Ordering from_sequence(std::vector<VertexId> order);

    VertexId size() const { return static_cast<VertexId>(rank_.size()); }
    VertexId rank_of(VertexId v) const { return rank_[v]; }
    VertexId vertex_at(VertexId position) const { return inverse_[position]; }

    std::span<const VertexId> ranks() const { return rank_; }
    std::span<const VertexId> sequence() const { return inverse_; }

    bool operator==(const Ordering&) const = default;

private:
    std::vector<VertexId> rank_;     // vertex -> position
    std::vector<VertexId> inverse_;  // position -> vertex
};

Ordering identity_order(const Graph& g);
// Seeded uniform permutation (Fisher-Yates over mt19937_64).
Ordering random_order(const Graph& g, std::uint64_t seed);

// Non-decreasing (degree, id); bucket sort, O(n + max_degree).
Ordering degree_order(const Graph& g);

// Ranks high-degree vertices alternately toward the two ends: with delta the
// 1-based position in the non-increasing (degree, id) sort, delta = 2i+1 maps
// to rank i+1 and delta = 2i to rank n+1-i (1-based).
Ordering split_order(const Graph& g);

// Greedy front/back placement by non-increasing degree: vertex u goes to the
// front when |N_b|*(|N_e|+|N_?|) < (|N_b|+|N_?|)*|N_e|, else to the back.
Ordering check_order(const Graph& g);

struct CoreDecomposition {
    Ordering order;                  // rank = removal time of min-degree peeling
    std::vector<VertexId> coreness;  // per vertex
    VertexId degeneracy = 0;         // max peel degree
};

// Repeated minimum-degree peeling with a bucket queue, O(n + m).
CoreDecomposition core_decompose(const Graph& g);
Ordering core_order(const Graph& g);

// Text format: one "original_label rank" line per vertex, ranks 1..n. The
// reader checks label coverage and rank bijectivity.
void write_ordering(const Graph& g, const Ordering& pi, std::ostream& out);
void write_ordering_file(const Graph& g, const Ordering& pi, const std::string& path);
Ordering read_ordering(const Graph& g, std::istream& in);
Ordering read_ordering_file(const Graph& g, const std::string& path);

}  // namespace trilist

#endif  // TRILIST_ORDERING_HPP
