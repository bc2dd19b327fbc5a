#include "trilist/ordering.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>

namespace trilist {

Ordering Ordering::identity(VertexId n) {
    std::vector<VertexId> rank(n);
    for (VertexId v = 0; v < n; ++v) rank[v] = v;
    Ordering pi;
    pi.rank_ = rank;
    pi.inverse_ = std::move(rank);
    return pi;
}

Ordering Ordering::from_ranks(std::vector<VertexId> ranks) {
    const auto n = static_cast<VertexId>(ranks.size());
    std::vector<VertexId> inverse(n, kInvalidVertex);
    for (VertexId v = 0; v < n; ++v) {
        if (ranks[v] >= n || inverse[ranks[v]] != kInvalidVertex)
            throw std::invalid_argument("ordering: ranks are not a bijection");
        inverse[ranks[v]] = v;
    }
    Ordering pi;
    pi.rank_ = std::move(ranks);
    pi.inverse_ = std::move(inverse);
    return pi;
}

Ordering Ordering::from_sequence(std::vector<VertexId> order) {
    const auto n = static_cast<VertexId>(order.size());
    std::vector<VertexId> rank(n, kInvalidVertex);
    for (VertexId position = 0; position < n; ++position) {
        const VertexId v = order[position];
        if (v >= n || rank[v] != kInvalidVertex)
            throw std::invalid_argument("ordering: sequence is not a permutation");
        rank[v] = position;
    }
    Ordering pi;
    pi.rank_ = std::move(rank);
    pi.inverse_ = std::move(order);
    return pi;
}

Ordering identity_order(const Graph& g) {
    return Ordering::identity(g.vertex_count());
}

Ordering random_order(const Graph& g, std::uint64_t seed) {
    const VertexId n = g.vertex_count();
    std::vector<VertexId> order(n);
    for (VertexId v = 0; v < n; ++v) order[v] = v;
    std::mt19937_64 rng(seed);
    for (VertexId i = n; i > 1; --i)
        std::swap(order[i - 1], order[bounded_rand(rng, i)]);
    return Ordering::from_sequence(std::move(order));
}

namespace {

// Vertices bucket-sorted by (degree, id); ascending = non-decreasing degree.
// The descending variant reverses the degree blocks but keeps ids ascending
// inside each block.
std::vector<VertexId> degree_sorted(const Graph& g, bool ascending) {
    const VertexId n = g.vertex_count();
    const VertexId max_deg = g.max_degree();
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(max_deg) + 1, 0);
    for (VertexId v = 0; v < n; ++v) ++counts[g.degree(v)];

    std::vector<std::uint64_t> cursor(counts.size(), 0);
    if (ascending) {
        for (std::size_t d = 1; d < counts.size(); ++d)
            cursor[d] = cursor[d - 1] + counts[d - 1];
    } else {
        std::uint64_t acc = 0;
        for (std::size_t d = counts.size(); d-- > 0;) {
            cursor[d] = acc;
            acc += counts[d];
        }
    }

    std::vector<VertexId> sorted(n);
    for (VertexId v = 0; v < n; ++v) sorted[cursor[g.degree(v)]++] = v;
    return sorted;
}

}  // namespace

Ordering degree_order(const Graph& g) {
    return Ordering::from_sequence(degree_sorted(g, /*ascending=*/true));
}

Ordering split_order(const Graph& g) {
    const VertexId n = g.vertex_count();
    const auto by_degree_desc = degree_sorted(g, /*ascending=*/false);
    std::vector<VertexId> rank(n);
    for (VertexId delta0 = 0; delta0 < n; ++delta0) {
        const VertexId v = by_degree_desc[delta0];
        // 0-based reading of the parity formula: even positions fill the
        // front, odd positions fill the back.
        rank[v] = (delta0 % 2 == 0) ? delta0 / 2 : n - 1 - delta0 / 2;
    }
    return Ordering::from_ranks(std::move(rank));
}

Ordering check_order(const Graph& g) {
    const VertexId n = g.vertex_count();
    const auto by_degree_desc = degree_sorted(g, /*ascending=*/false);
    std::vector<VertexId> in_begin(n, 0), in_end(n, 0);
    std::vector<VertexId> begin_side, end_side;
    begin_side.reserve(n);
    end_side.reserve(n);

    for (const VertexId u : by_degree_desc) {
        const std::uint64_t nb = in_begin[u];
        const std::uint64_t ne = in_end[u];
        const std::uint64_t nq = g.degree(u) - nb - ne;
        const std::uint64_t cost_begin = nb * (ne + nq);
        const std::uint64_t cost_end = (nb + nq) * ne;
        if (cost_begin < cost_end) {
            begin_side.push_back(u);
            for (VertexId v : g.neighbors(u)) ++in_begin[v];
        } else {  // tie goes to the back
            end_side.push_back(u);
            for (VertexId v : g.neighbors(u)) ++in_end[v];
        }
    }

    // Each back placement lands just before the previously placed back
    // vertices, so the final back segment is the reverse placement order.
    std::vector<VertexId> order(std::move(begin_side));
    order.insert(order.end(), end_side.rbegin(), end_side.rend());
    return Ordering::from_sequence(std::move(order));
}

CoreDecomposition core_decompose(const Graph& g) {
    const VertexId n = g.vertex_count();
    const VertexId max_deg = g.max_degree();

    // Bucket-queue peeling: vert holds vertices sorted by current degree,
    // pos/bin track positions so a degree decrement is a swap.
    std::vector<VertexId> deg(n), vert(n), pos(n);
    std::vector<std::uint64_t> bin(static_cast<std::size_t>(max_deg) + 2, 0);
    for (VertexId v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        ++bin[deg[v] + 1];
    }
    for (std::size_t d = 1; d < bin.size(); ++d) bin[d] += bin[d - 1];
    {
        std::vector<std::uint64_t> cursor(bin.begin(), bin.end() - 1);
        for (VertexId v = 0; v < n; ++v) {
            pos[v] = static_cast<VertexId>(cursor[deg[v]]);
            vert[cursor[deg[v]]++] = v;
        }
    }

    CoreDecomposition result;
    result.coreness.assign(n, 0);
    std::vector<VertexId> removal(n);
    for (VertexId step = 0; step < n; ++step) {
        const VertexId v = vert[step];
        removal[step] = v;
        result.coreness[v] = deg[v];
        result.degeneracy = std::max(result.degeneracy, deg[v]);
        for (const VertexId u : g.neighbors(v)) {
            if (deg[u] <= deg[v]) continue;
            // Swap u with the first vertex of its degree bucket, then shrink.
            const VertexId du = deg[u];
            const auto first_pos = static_cast<VertexId>(bin[du]);
            const VertexId first_vert = vert[first_pos];
            if (u != first_vert) {
                std::swap(vert[pos[u]], vert[first_pos]);
                std::swap(pos[u], pos[first_vert]);
            }
            ++bin[du];
            --deg[u];
        }
        // v's bucket shrinks past it so it is never revisited.
        ++bin[deg[v]];
    }
    result.order = Ordering::from_sequence(std::move(removal));
    return result;
}

Ordering core_order(const Graph& g) { return core_decompose(g).order; }

void write_ordering(const Graph& g, const Ordering& pi, std::ostream& out) {
    if (pi.size() != g.vertex_count())
        throw std::invalid_argument("write_ordering: ordering size mismatch");
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        out << g.label_of(v) << ' ' << pi.rank_of(v) + 1 << '\n';
}

void write_ordering_file(const Graph& g, const Ordering& pi, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write ordering: " + path);
    write_ordering(g, pi, out);
}

Ordering read_ordering(const Graph& g, std::istream& in) {
    const VertexId n = g.vertex_count();
    std::vector<VertexId> rank(n, kInvalidVertex);
    std::vector<bool> rank_used(n, false);
    std::string line;
    std::size_t line_no = 0;
    std::uint64_t assigned = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;

        std::int64_t label;
        std::uint64_t rank1;
        const char* first = line.data();
        const char* last = line.data() + line.size();
        auto r1 = std::from_chars(first, last, label);
        if (r1.ec != std::errc{}) throw ParseError(line_no, "bad vertex label");
        const char* p = r1.ptr;
        while (p != last && (*p == ' ' || *p == '\t')) ++p;
        auto r2 = std::from_chars(p, last, rank1);
        if (r2.ec != std::errc{}) throw ParseError(line_no, "bad rank");
        for (p = r2.ptr; p != last; ++p)
            if (*p != ' ' && *p != '\t')
                throw ParseError(line_no, "trailing tokens after rank");

        const VertexId v = g.dense_id(label);
        if (v == kInvalidVertex)
            throw ParseError(line_no, "label not present in graph");
        if (rank1 < 1 || rank1 > n)
            throw ParseError(line_no, "rank out of range 1..n");
        if (rank[v] != kInvalidVertex)
            throw ParseError(line_no, "vertex assigned twice");
        if (rank_used[rank1 - 1])
            throw ParseError(line_no, "rank assigned twice");
        rank[v] = static_cast<VertexId>(rank1 - 1);
        rank_used[rank1 - 1] = true;
        ++assigned;
    }
    if (assigned != n)
        throw std::runtime_error("ordering file does not cover every vertex");
    return Ordering::from_ranks(std::move(rank));
}

Ordering read_ordering_file(const Graph& g, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open ordering: " + path);
    return read_ordering(g, in);
}

}  // namespace trilist
