#include "trilist/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <unordered_set>

namespace trilist {

Graph Graph::from_dense_edges(VertexId n,
                              std::vector<std::pair<VertexId, VertexId>> edges,
                              std::vector<std::int64_t> labels) {
    if (labels.empty()) {
        labels.resize(n);
        for (VertexId u = 0; u < n; ++u) labels[u] = u;
    }
    if (labels.size() != n)
        throw std::invalid_argument("from_dense_edges: one label per vertex required");
    if (!std::is_sorted(labels.begin(), labels.end()) ||
        std::adjacent_find(labels.begin(), labels.end()) != labels.end())
        throw std::invalid_argument("from_dense_edges: labels must be strictly increasing");
    for (auto& [a, b] : edges) {
        if (a >= n || b >= n)
            throw std::invalid_argument("from_dense_edges: vertex id out of range");
        if (a == b) throw std::invalid_argument("from_dense_edges: loop edge");
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("from_dense_edges: duplicate edge");

    Graph g;
    g.n_ = n;
    g.m_ = edges.size();
    g.labels_ = std::move(labels);
    g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& [a, b] : edges) {
        ++g.offsets_[a + 1];
        ++g.offsets_[b + 1];
    }
    for (VertexId u = 0; u < n; ++u) g.offsets_[u + 1] += g.offsets_[u];

    g.adjacency_.resize(2 * g.m_);
    std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [a, b] : edges) {
        g.adjacency_[cursor[a]++] = b;
        g.adjacency_[cursor[b]++] = a;
    }
    for (VertexId u = 0; u < n; ++u)
        std::sort(g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u]),
                  g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[u + 1]));
    return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    const auto nbrs = neighbors(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

VertexId Graph::max_degree() const {
    VertexId best = 0;
    for (VertexId u = 0; u < n_; ++u) best = std::max(best, degree(u));
    return best;
}

std::uint64_t Graph::sum_degree_squares() const {
    std::uint64_t total = 0;
    for (VertexId u = 0; u < n_; ++u) {
        const std::uint64_t d = degree(u);
        total += d * d;
    }
    return total;
}

VertexId Graph::dense_id(std::int64_t label) const {
    const auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) return kInvalidVertex;
    return static_cast<VertexId>(it - labels_.begin());
}

std::vector<LabeledEdge> Graph::labeled_edges() const {
    std::vector<LabeledEdge> edges;
    edges.reserve(m_);
    for (VertexId u = 0; u < n_; ++u)
        for (VertexId v : neighbors(u))
            if (u < v) edges.emplace_back(labels_[u], labels_[v]);
    return edges;
}

void Graph::check_invariants() const {
    if (offsets_.size() != static_cast<std::size_t>(n_) + 1)
        throw std::logic_error("graph: offset table size mismatch");
    if (labels_.size() != n_)
        throw std::logic_error("graph: label table size mismatch");
    if (adjacency_.size() != 2 * m_)
        throw std::logic_error("graph: adjacency size is not 2m");
    for (VertexId u = 0; u < n_; ++u) {
        const auto nbrs = neighbors(u);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            if (nbrs[i] >= n_) throw std::logic_error("graph: neighbor out of range");
            if (nbrs[i] == u) throw std::logic_error("graph: self-loop");
            if (i > 0 && nbrs[i - 1] >= nbrs[i])
                throw std::logic_error("graph: neighbor list not strictly increasing");
            if (!has_edge(nbrs[i], u))
                throw std::logic_error("graph: asymmetric adjacency");
        }
    }
    if (!std::is_sorted(labels_.begin(), labels_.end()))
        throw std::logic_error("graph: label table not sorted");
}

Graph normalize(std::span<const LabeledEdge> raw_edges, NormalizeStats* stats) {
    NormalizeStats local;
    std::vector<LabeledEdge> edges;
    edges.reserve(raw_edges.size());
    for (const auto& [a, b] : raw_edges) {
        if (a == b) {
            ++local.loops_removed;
            continue;
        }
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges.begin(), edges.end());
    const auto last = std::unique(edges.begin(), edges.end());
    local.duplicates_removed = static_cast<std::uint64_t>(edges.end() - last);
    edges.erase(last, edges.end());

    std::vector<std::int64_t> labels;
    labels.reserve(2 * edges.size());
    for (const auto& [a, b] : edges) {
        labels.push_back(a);
        labels.push_back(b);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

    auto to_dense = [&labels](std::int64_t label) {
        return static_cast<VertexId>(
            std::lower_bound(labels.begin(), labels.end(), label) - labels.begin());
    };
    std::vector<std::pair<VertexId, VertexId>> dense;
    dense.reserve(edges.size());
    for (const auto& [a, b] : edges) dense.emplace_back(to_dense(a), to_dense(b));

    if (stats) *stats = local;
    const VertexId n = static_cast<VertexId>(labels.size());
    return Graph::from_dense_edges(n, std::move(dense), std::move(labels));
}

namespace {

bool parse_label(std::string_view token, std::int64_t& out) {
    const char* first = token.data();
    const char* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

}  // namespace

Graph load_edgelist(std::istream& in, NormalizeStats* stats) {
    std::vector<LabeledEdge> edges;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();

        std::size_t pos = 0;
        auto next_token = [&]() -> std::string_view {
            while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
            const std::size_t start = pos;
            while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
            return std::string_view(line).substr(start, pos - start);
        };

        const auto tok_u = next_token();
        if (tok_u.empty() || tok_u.front() == '#') continue;
        const auto tok_v = next_token();
        std::int64_t u, v;
        if (tok_v.empty() || !parse_label(tok_u, u) || !parse_label(tok_v, v))
            throw ParseError(line_no, "expected two integer labels, got \"" + line + "\"");
        if (!next_token().empty())
            throw ParseError(line_no, "trailing tokens after edge pair");
        edges.emplace_back(u, v);
    }
    if (in.bad()) throw std::runtime_error("edge list: stream read failure");
    return normalize(edges, stats);
}

Graph load_edgelist_file(const std::string& path, NormalizeStats* stats) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open edge list: " + path);
    return load_edgelist(in, stats);
}

void write_edgelist(const Graph& g, std::ostream& out) {
    for (const auto& [a, b] : g.labeled_edges()) out << a << ' ' << b << '\n';
}

void write_edgelist_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write edge list: " + path);
    write_edgelist(g, out);
}

Graph gen_gnm(VertexId n, std::uint64_t m, std::uint64_t seed) {
    const std::uint64_t total =
        n == 0 ? 0 : static_cast<std::uint64_t>(n) * (n - 1) / 2;
    if (m > total)
        throw std::invalid_argument("gen_gnm: more edges than vertex pairs");

    // Floyd's uniform m-subset of pair indices.
    std::mt19937_64 rng(seed);
    std::unordered_set<std::uint64_t> chosen;
    chosen.reserve(static_cast<std::size_t>(m) * 2);
    for (std::uint64_t j = total - m; j < total; ++j) {
        const std::uint64_t t = bounded_rand(rng, j + 1);
        chosen.insert(chosen.count(t) ? j : t);
    }

    // Pair index k -> (u, v) with u < v: k = u*n - u(u+1)/2 + (v - u - 1).
    auto row_base = [n](std::uint64_t u) { return u * n - u * (u + 1) / 2; };
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (const std::uint64_t k : chosen) {
        std::uint64_t lo = 0, hi = n - 1;  // largest u with row_base(u) <= k
        while (lo < hi) {
            const std::uint64_t mid = (lo + hi + 1) / 2;
            if (row_base(mid) <= k)
                lo = mid;
            else
                hi = mid - 1;
        }
        const auto u = static_cast<VertexId>(lo);
        const auto v = static_cast<VertexId>(k - row_base(lo) + lo + 1);
        edges.emplace_back(u, v);
    }
    return Graph::from_dense_edges(n, std::move(edges));
}

}  // namespace trilist
