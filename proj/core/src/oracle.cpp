#include "trilist/oracle.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

namespace trilist {

std::vector<std::array<VertexId, 3>> brute_triangles(const Graph& g, VertexId guard) {
    if (g.vertex_count() > guard)
        throw GuardExceeded("brute_triangles: graph larger than guard (" +
                            std::to_string(g.vertex_count()) + " > " +
                            std::to_string(guard) + " vertices)");
    std::vector<std::array<VertexId, 3>> triangles;
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        for (const VertexId v : g.neighbors(u)) {
            if (v <= u) continue;
            // common neighbors above v close a triangle exactly once
            for (const VertexId w : g.neighbors(v)) {
                if (w <= v) continue;
                if (g.has_edge(u, w)) triangles.push_back({u, v, w});
            }
        }
    }
    std::sort(triangles.begin(), triangles.end());
    return triangles;
}

namespace {

struct PlacementSearch {
    VertexId n;
    CostKind kind;
    std::vector<std::uint64_t> adj_mask;  // n <= 63
    std::vector<VertexId> degree;
    std::vector<std::uint64_t> weights;
    bool prune;

    std::uint64_t best_cost = ~std::uint64_t{0};
    std::vector<VertexId> best_order, current;

    std::uint64_t place_cost(VertexId u, std::uint64_t placed) const {
        const auto before =
            static_cast<std::uint64_t>(std::popcount(adj_mask[u] & placed));
        const std::uint64_t after = degree[u] - before;
        if (kind == CostKind::pm) return before * after;
        const std::uint64_t out = after + weights[u];
        return out * out;
    }

    // lower_bound: weights of unplaced vertices are paid at least squared.
    void dfs(std::uint64_t placed, std::uint64_t cost, std::uint64_t lower_bound) {
        if (prune && cost + lower_bound >= best_cost) return;
        if (current.size() == n) {
            if (cost < best_cost) {
                best_cost = cost;
                best_order = current;
            }
            return;
        }
        for (VertexId u = 0; u < n; ++u) {
            const std::uint64_t bit = std::uint64_t{1} << u;
            if (placed & bit) continue;
            const std::uint64_t wsq = weights[u] * weights[u];
            current.push_back(u);
            dfs(placed | bit, cost + place_cost(u, placed), lower_bound - wsq);
            current.pop_back();
        }
    }

    // Greedy achievable order seeds the bound so pruning bites early.
    void seed_greedy() {
        std::uint64_t placed = 0, cost = 0;
        std::vector<VertexId> order;
        order.reserve(n);
        for (VertexId step = 0; step < n; ++step) {
            VertexId pick = kInvalidVertex;
            std::uint64_t pick_cost = 0;
            for (VertexId u = 0; u < n; ++u) {
                if (placed & (std::uint64_t{1} << u)) continue;
                const std::uint64_t c = place_cost(u, placed);
                if (pick == kInvalidVertex || c < pick_cost) {
                    pick = u;
                    pick_cost = c;
                }
            }
            placed |= std::uint64_t{1} << pick;
            cost += pick_cost;
            order.push_back(pick);
        }
        best_cost = cost;
        best_order = std::move(order);
    }
};

}  // namespace

ExhaustiveResult min_cost_exhaustive(const Graph& g, CostKind kind,
                                     std::span<const std::uint64_t> weights,
                                     VertexId guard, bool prune) {
    const VertexId n = g.vertex_count();
    if (n > guard)
        throw GuardExceeded("min_cost_exhaustive: graph larger than guard (" +
                            std::to_string(n) + " > " + std::to_string(guard) +
                            " vertices)");
    if (n > 63)
        throw GuardExceeded("min_cost_exhaustive: hard cap of 63 vertices");
    if (!weights.empty() && weights.size() != n)
        throw std::invalid_argument("min_cost_exhaustive: one weight per vertex");
    if (kind == CostKind::pm &&
        std::any_of(weights.begin(), weights.end(), [](auto w) { return w != 0; }))
        throw std::invalid_argument("min_cost_exhaustive: weights apply to pp only");

    PlacementSearch search;
    search.n = n;
    search.kind = kind;
    search.prune = prune;
    search.weights.assign(n, 0);
    if (!weights.empty()) search.weights.assign(weights.begin(), weights.end());
    search.adj_mask.assign(n, 0);
    search.degree.assign(n, 0);
    for (VertexId u = 0; u < n; ++u) {
        search.degree[u] = g.degree(u);
        for (const VertexId v : g.neighbors(u))
            search.adj_mask[u] |= std::uint64_t{1} << v;
    }

    if (n == 0) return {0, Ordering()};

    std::uint64_t weight_sq = 0;
    for (VertexId u = 0; u < n; ++u) weight_sq += search.weights[u] * search.weights[u];

    if (prune) search.seed_greedy();
    search.current.reserve(n);
    search.dfs(0, 0, weight_sq);

    return {search.best_cost, Ordering::from_sequence(std::move(search.best_order))};
}

void NaeFormula::validate() const {
    for (const auto& clause : clauses) {
        for (const auto var : clause)
            if (var < 1 || var > n_vars)
                throw std::invalid_argument("nae formula: variable index out of range");
        if (clause[0] == clause[1] || clause[0] == clause[2] || clause[1] == clause[2])
            throw std::invalid_argument("nae formula: clause repeats a variable");
    }
}

namespace {

std::vector<std::uint64_t> line_numbers(std::istream& in, std::string& line,
                                        std::size_t& line_no) {
    // next non-blank, non-comment line split into unsigned numbers
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::vector<std::uint64_t> numbers;
        const char* p = line.data();
        const char* last = line.data() + line.size();
        while (p != last) {
            while (p != last && (*p == ' ' || *p == '\t')) ++p;
            if (p == last || *p == '#') break;
            std::uint64_t value;
            const auto r = std::from_chars(p, last, value);
            if (r.ec != std::errc{})
                throw ParseError(line_no, "expected an unsigned integer");
            numbers.push_back(value);
            p = r.ptr;
        }
        if (!numbers.empty()) return numbers;
    }
    return {};
}

}  // namespace

NaeFormula parse_nae_formula(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    const auto header = line_numbers(in, line, line_no);
    if (header.size() != 2)
        throw ParseError(line_no, "expected header \"n_vars n_clauses\"");
    NaeFormula f;
    f.n_vars = static_cast<std::uint32_t>(header[0]);
    const auto n_clauses = header[1];
    for (std::uint64_t i = 0; i < n_clauses; ++i) {
        const auto row = line_numbers(in, line, line_no);
        if (row.size() != 3)
            throw ParseError(line_no, "expected clause \"a b c\"");
        f.clauses.push_back({static_cast<std::uint32_t>(row[0]),
                             static_cast<std::uint32_t>(row[1]),
                             static_cast<std::uint32_t>(row[2])});
    }
    f.validate();
    return f;
}

NaeFormula parse_nae_formula_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open formula: " + path);
    return parse_nae_formula(in);
}

bool nae_satisfiable(const NaeFormula& f, std::uint32_t guard) {
    f.validate();
    if (f.n_vars > guard)
        throw GuardExceeded("nae_satisfiable: more variables than guard allows");
    const std::uint64_t limit = std::uint64_t{1} << f.n_vars;
    for (std::uint64_t assignment = 0; assignment < limit; ++assignment) {
        bool ok = true;
        for (const auto& clause : f.clauses) {
            const bool a = assignment >> (clause[0] - 1) & 1;
            const bool b = assignment >> (clause[1] - 1) & 1;
            const bool c = assignment >> (clause[2] - 1) & 1;
            if (a == b && b == c) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

void SetCoverInstance::validate() const {
    if (universe_size == 0)
        throw std::invalid_argument("set cover: empty universe");
    if (universe_size > 64)
        throw std::invalid_argument("set cover: universe larger than 64");
    std::uint64_t covered = 0;
    for (const auto& s : sets) {
        for (const auto e : s) {
            if (e < 1 || e > universe_size)
                throw std::invalid_argument("set cover: element out of range");
            covered |= std::uint64_t{1} << (e - 1);
        }
        if (!std::is_sorted(s.begin(), s.end()) ||
            std::adjacent_find(s.begin(), s.end()) != s.end())
            throw std::invalid_argument("set cover: set not sorted or repeats an element");
    }
    if (sets.size() < budget)
        throw std::invalid_argument("set cover: fewer sets than the budget k");
    const std::uint64_t full = universe_size == 64
                                   ? ~std::uint64_t{0}
                                   : (std::uint64_t{1} << universe_size) - 1;
    if (covered != full)
        throw UncoverableUniverse("set cover: some element is in no set");
}

SetCoverInstance parse_set_cover(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    const auto header = line_numbers(in, line, line_no);
    if (header.size() != 2)
        throw ParseError(line_no, "expected header \"n k\"");
    SetCoverInstance inst;
    inst.universe_size = static_cast<std::uint32_t>(header[0]);
    inst.budget = static_cast<std::uint32_t>(header[1]);
    for (;;) {
        auto row = line_numbers(in, line, line_no);
        if (row.empty()) break;
        std::vector<std::uint32_t> set(row.begin(), row.end());
        std::sort(set.begin(), set.end());
        inst.sets.push_back(std::move(set));
    }
    inst.validate();
    return inst;
}

SetCoverInstance parse_set_cover_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open set cover instance: " + path);
    return parse_set_cover(in);
}

std::uint32_t min_set_cover(const SetCoverInstance& inst, std::uint32_t guard) {
    inst.validate();  // throws UncoverableUniverse on an uncoverable instance
    const auto n_sets = static_cast<std::uint32_t>(inst.sets.size());
    if (n_sets > guard)
        throw GuardExceeded("min_set_cover: more sets than guard allows");

    std::vector<std::uint64_t> masks(n_sets, 0);
    for (std::uint32_t j = 0; j < n_sets; ++j)
        for (const auto e : inst.sets[j]) masks[j] |= std::uint64_t{1} << (e - 1);
    const std::uint64_t full = inst.universe_size == 64
                                   ? ~std::uint64_t{0}
                                   : (std::uint64_t{1} << inst.universe_size) - 1;

    std::uint32_t best = n_sets;
    for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << n_sets); ++pick) {
        const auto size = static_cast<std::uint32_t>(std::popcount(pick));
        if (size >= best) continue;
        std::uint64_t covered = 0;
        for (std::uint32_t j = 0; j < n_sets; ++j)
            if (pick >> j & 1) covered |= masks[j];
        if (covered == full) best = size;
    }
    return best;
}

}  // namespace trilist
