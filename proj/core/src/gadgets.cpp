#include "trilist/gadgets.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace trilist {

CostMultiset::CostMultiset(std::vector<std::uint64_t> costs) : costs_(std::move(costs)) {
    if (costs_.empty())
        throw std::invalid_argument("cost multiset: empty");
    std::sort(costs_.begin(), costs_.end());
}

std::uint64_t CostMultiset::linear_cost() const {
    std::uint64_t total = 0;
    for (const auto c : costs_) total += c;
    return total;
}

std::uint64_t CostMultiset::squared_cost() const {
    std::uint64_t total = 0;
    for (const auto c : costs_) total += c * c;
    return total;
}

std::uint64_t CostMultiset::marginal_cost() const {
    const auto n = static_cast<std::uint64_t>(costs_.size());
    const std::uint64_t linear = linear_cost();
    // linear = n*d + v with 1 <= v <= n; d may be -1 for an all-zero multiset.
    const std::int64_t d =
        linear == 0 ? -1 : static_cast<std::int64_t>((linear - 1) / n);
    std::uint64_t marginal = 0;
    for (const auto c : costs_) {
        const std::int64_t excess = static_cast<std::int64_t>(c) - (d + 1);
        if (excess > 0) marginal += static_cast<std::uint64_t>(excess);
    }
    return marginal;
}

namespace {

std::vector<VertexId> out_degrees(const Graph& g, const Ordering& pi) {
    if (pi.size() != g.vertex_count())
        throw std::invalid_argument("ordering does not match graph");
    std::vector<VertexId> out(g.vertex_count(), 0);
    const auto ranks = pi.ranks();
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        for (const VertexId v : g.neighbors(u))
            if (ranks[u] < ranks[v]) ++out[u];
    return out;
}

void require_weights(const WeightedGraph& wg) {
    if (wg.weights.size() != wg.graph.vertex_count())
        throw std::invalid_argument("weighted graph: one weight per vertex required");
}

}  // namespace

CostMultiset multiset_costs(const WeightedGraph& wg, const Ordering& pi) {
    require_weights(wg);
    const auto out = out_degrees(wg.graph, pi);
    std::vector<std::uint64_t> costs(wg.graph.vertex_count());
    for (VertexId u = 0; u < wg.graph.vertex_count(); ++u)
        costs[u] = out[u] + wg.weights[u];
    return CostMultiset(std::move(costs));
}

std::uint64_t weighted_cost(const WeightedGraph& wg, const Ordering& pi) {
    require_weights(wg);
    const auto out = out_degrees(wg.graph, pi);
    std::uint64_t total = 0;
    for (VertexId u = 0; u < wg.graph.vertex_count(); ++u) {
        const std::uint64_t c = out[u] + wg.weights[u];
        total += c * c;
    }
    return total;
}

VertexId find_role(const LabeledGadget& gadget, std::string_view role) {
    VertexId found = kInvalidVertex;
    for (VertexId u = 0; u < gadget.roles.size(); ++u) {
        if (gadget.roles[u] == role) {
            if (found != kInvalidVertex)
                throw std::invalid_argument("find_role: role not unique: " +
                                            std::string(role));
            found = u;
        }
    }
    if (found == kInvalidVertex)
        throw std::invalid_argument("find_role: no vertex with role " + std::string(role));
    return found;
}

LabeledGadget nae_graph(const NaeFormula& f) {
    f.validate();
    const auto n_vars = f.n_vars;
    const auto n_clauses = static_cast<std::uint32_t>(f.clauses.size());
    const VertexId n = n_vars + 3 * n_clauses;

    // X_i at dense id i-1; clause j's literal vertices L_j^1..L_j^3 follow.
    auto literal_vertex = [n_vars](std::uint32_t j, std::uint32_t a) {
        return static_cast<VertexId>(n_vars + 3 * j + a);
    };
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::uint32_t j = 0; j < n_clauses; ++j) {
        edges.emplace_back(literal_vertex(j, 0), literal_vertex(j, 1));
        edges.emplace_back(literal_vertex(j, 0), literal_vertex(j, 2));
        edges.emplace_back(literal_vertex(j, 1), literal_vertex(j, 2));
        for (std::uint32_t a = 0; a < 3; ++a)
            edges.emplace_back(static_cast<VertexId>(f.clauses[j][a] - 1),
                               literal_vertex(j, a));
    }

    LabeledGadget gadget;
    gadget.weighted.graph = Graph::from_dense_edges(n, std::move(edges));
    gadget.weighted.weights.assign(n, 0);
    gadget.roles.reserve(n);
    for (std::uint32_t i = 1; i <= n_vars; ++i)
        gadget.roles.push_back("X" + std::to_string(i));
    for (std::uint32_t j = 1; j <= n_clauses; ++j)
        for (std::uint32_t a = 1; a <= 3; ++a)
            gadget.roles.push_back("L" + std::to_string(j) + "^" + std::to_string(a));
    gadget.threshold = 2 * static_cast<std::uint64_t>(n_clauses);
    return gadget;
}

std::uint64_t ld_reference_cost(std::uint32_t d) {
    if (d < 1) throw std::invalid_argument("ld gadget needs d >= 1");
    const std::uint64_t dd = d;
    return dd * dd + dd * (dd + 1) * (dd + 1) + dd * (dd + 1) * (2 * dd + 1) / 6;
}

LabeledGadget ld_gadget(std::uint32_t d) {
    if (d < 1) throw std::invalid_argument("ld gadget needs d >= 1");
    // e at id 0, v_1..v_d at 1..d, K_0..K_d at d+1..2d+1.
    const VertexId n = 2 * d + 2;
    auto clique_vertex = [d](std::uint32_t i) { return static_cast<VertexId>(d + 1 + i); };

    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::uint32_t i = 1; i <= d; ++i) {
        edges.emplace_back(0, static_cast<VertexId>(i));
        for (std::uint32_t j = 0; j <= d; ++j)
            edges.emplace_back(static_cast<VertexId>(i), clique_vertex(j));
    }
    for (std::uint32_t i = 0; i <= d; ++i)
        for (std::uint32_t j = i + 1; j <= d; ++j)
            edges.emplace_back(clique_vertex(i), clique_vertex(j));

    LabeledGadget gadget;
    gadget.weighted.graph = Graph::from_dense_edges(n, std::move(edges));
    gadget.weighted.weights.assign(n, 0);
    gadget.roles.reserve(n);
    gadget.roles.push_back("e");
    for (std::uint32_t i = 1; i <= d; ++i) gadget.roles.push_back("v" + std::to_string(i));
    for (std::uint32_t i = 0; i <= d; ++i) gadget.roles.push_back("K" + std::to_string(i));
    gadget.threshold = ld_reference_cost(d);
    gadget.d = d;
    return gadget;
}

LabeledGadget setcover_graph(const SetCoverInstance& inst, std::uint32_t d_override) {
    inst.validate();
    const std::uint32_t n_elems = inst.universe_size;
    const auto n_sets = static_cast<std::uint32_t>(inst.sets.size());
    std::uint32_t max_set = 0;
    std::uint64_t total_memberships = 0;
    for (const auto& s : inst.sets) {
        max_set = std::max(max_set, static_cast<std::uint32_t>(s.size()));
        total_memberships += s.size();
    }
    // smallest d with d > #sets and d > 2|S_j| for every j
    const std::uint32_t d_min = 1 + std::max(n_sets, 2 * max_set);
    if (d_override != 0 && d_override < d_min)
        throw std::invalid_argument("setcover_graph: d below the admissible minimum");
    const std::uint32_t d = d_override == 0 ? d_min : d_override;

    // A at 0, e_1..e_n at 1..n, s_1..s_l following, then one a,b,c triple per
    // membership (j ascending, elements ascending within a set).
    const VertexId a_vertex = 0;
    auto elem_vertex = [](std::uint32_t i) { return static_cast<VertexId>(i); };
    auto set_vertex = [n_elems](std::uint32_t j) {
        return static_cast<VertexId>(n_elems + 1 + j);
    };
    VertexId next_id = static_cast<VertexId>(1 + n_elems + n_sets);

    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<std::string> roles(next_id);
    roles[a_vertex] = "A";
    for (std::uint32_t i = 1; i <= n_elems; ++i) {
        roles[elem_vertex(i)] = "e" + std::to_string(i);
        edges.emplace_back(a_vertex, elem_vertex(i));
    }
    for (std::uint32_t j = 0; j < n_sets; ++j) {
        roles[set_vertex(j)] = "s" + std::to_string(j + 1);
        edges.emplace_back(a_vertex, set_vertex(j));
    }
    for (std::uint32_t j = 0; j < n_sets; ++j) {
        for (const std::uint32_t i : inst.sets[j]) {
            const VertexId a = next_id++;
            const VertexId b = next_id++;
            const VertexId c = next_id++;
            const auto suffix = std::to_string(j + 1) + "_" + std::to_string(i);
            roles.push_back("a" + suffix);
            roles.push_back("b" + suffix);
            roles.push_back("c" + suffix);
            edges.emplace_back(a, set_vertex(j));
            edges.emplace_back(b, set_vertex(j));
            edges.emplace_back(a, c);
            edges.emplace_back(b, c);
            edges.emplace_back(c, elem_vertex(i));
        }
    }

    const VertexId n = next_id;
    LabeledGadget gadget;
    gadget.weighted.graph = Graph::from_dense_edges(n, std::move(edges));
    gadget.roles = std::move(roles);
    gadget.d = d;

    // weight = target elimination cost minus degree; targets are d+2
    // everywhere except c vertices (d+3) and A (d+1+n+k).
    gadget.weighted.weights.assign(n, 0);
    for (VertexId u = 0; u < n; ++u) {
        std::uint64_t target = d + 2;
        if (gadget.roles[u][0] == 'c') target = d + 3;
        if (u == a_vertex)
            target = static_cast<std::uint64_t>(d) + 1 + n_elems + inst.budget;
        const std::uint64_t deg = gadget.weighted.graph.degree(u);
        if (target < deg)
            throw std::logic_error("setcover gadget: negative weight, d too small");
        gadget.weighted.weights[u] = target - deg;
    }

    // V = k(d+2)^2 + (sum|S| - n)d^2 + r(d+1)^2
    const std::uint64_t dd = d;
    const std::uint64_t extra = total_memberships - n_elems;
    const std::uint64_t r = n - inst.budget - extra;
    gadget.threshold = inst.budget * (dd + 2) * (dd + 2) + extra * dd * dd +
                       r * (dd + 1) * (dd + 1);
    return gadget;
}

WeightlessReduction weighted_to_weightless(const WeightedGraph& wg,
                                           VertexId max_vertices) {
    require_weights(wg);
    const Graph& g = wg.graph;
    VertexId n = g.vertex_count();

    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(g.edge_count());
    for (VertexId u = 0; u < n; ++u)
        for (const VertexId v : g.neighbors(u))
            if (u < v) edges.emplace_back(u, v);

    std::vector<std::int64_t> labels = g.labels();
    std::int64_t next_label = labels.empty() ? 0 : labels.back() + 1;

    WeightlessReduction result;
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        if (wg.weights[u] > max_vertices)
            throw GuardExceeded("weighted_to_weightless: weight alone exceeds the size limit");
        // degree + remaining weight is invariant across attachments, so every
        // gadget hung on u has the same size d.
        const std::uint32_t d =
            g.degree(u) + static_cast<std::uint32_t>(wg.weights[u]);
        for (std::uint64_t unit = 0; unit < wg.weights[u]; ++unit) {
            if (static_cast<std::uint64_t>(n) + 2 * d + 2 > max_vertices)
                throw GuardExceeded("weighted_to_weightless: output exceeds " +
                                    std::to_string(max_vertices) + " vertices");
            const VertexId e_vertex = n;
            const VertexId fan_first = n + 1;            // v_1..v_d
            const VertexId clique_first = n + 1 + d;     // K_0..K_d
            for (std::uint32_t i = 0; i < d; ++i) {
                edges.emplace_back(e_vertex, fan_first + i);
                for (std::uint32_t j = 0; j <= d; ++j)
                    edges.emplace_back(fan_first + i, clique_first + j);
            }
            for (std::uint32_t i = 0; i <= d; ++i)
                for (std::uint32_t j = i + 1; j <= d; ++j)
                    edges.emplace_back(clique_first + i, clique_first + j);
            edges.emplace_back(u, e_vertex);

            n += 2 * d + 2;
            for (std::uint32_t i = 0; i < 2 * d + 2u; ++i) labels.push_back(next_label++);
            result.cost_offset += ld_reference_cost(d);
            result.attachments.push_back({u, d, e_vertex});
        }
    }
    result.graph = Graph::from_dense_edges(n, std::move(edges), std::move(labels));
    return result;
}

void write_gadget(const LabeledGadget& gadget, std::ostream& edges_out,
                  std::ostream& labels_out) {
    write_edgelist(gadget.weighted.graph, edges_out);
    for (VertexId u = 0; u < gadget.weighted.graph.vertex_count(); ++u)
        labels_out << gadget.weighted.graph.label_of(u) << ' ' << gadget.roles[u]
                   << ' ' << gadget.weighted.weights[u] << '\n';
}

WeightedGraph read_weighted_graph(std::istream& edges_in, std::istream& labels_in,
                                  std::vector<std::string>* roles) {
    std::vector<LabeledEdge> raw_edges;
    {
        // reuse the text edge list reader through a normalized graph, but keep
        // the raw pairs: isolated vertices may still appear in the sidecar
        Graph parsed = load_edgelist(edges_in);
        raw_edges = parsed.labeled_edges();
    }

    struct SidecarEntry {
        std::string role;
        std::uint64_t weight = 0;
    };
    std::map<std::int64_t, SidecarEntry> sidecar;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(labels_in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        std::istringstream row(line);
        std::int64_t label;
        SidecarEntry entry;
        if (!(row >> label >> entry.role >> entry.weight))
            throw ParseError(line_no, "expected \"label role weight\"");
        if (!sidecar.emplace(label, std::move(entry)).second)
            throw ParseError(line_no, "label listed twice");
    }

    // vertex set = edge endpoints plus sidecar-only (isolated) labels
    std::vector<std::int64_t> labels;
    for (const auto& [a, b] : raw_edges) {
        labels.push_back(a);
        labels.push_back(b);
    }
    for (const auto& [label, entry] : sidecar) labels.push_back(label);
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

    std::vector<std::pair<VertexId, VertexId>> dense;
    dense.reserve(raw_edges.size());
    auto to_dense = [&labels](std::int64_t label) {
        return static_cast<VertexId>(
            std::lower_bound(labels.begin(), labels.end(), label) - labels.begin());
    };
    for (const auto& [a, b] : raw_edges) dense.emplace_back(to_dense(a), to_dense(b));

    const auto n = static_cast<VertexId>(labels.size());
    WeightedGraph wg;
    wg.graph = Graph::from_dense_edges(n, std::move(dense), std::move(labels));
    wg.weights.assign(n, 0);
    if (roles) roles->assign(n, "-");
    for (const auto& [label, entry] : sidecar) {
        const VertexId u = wg.graph.dense_id(label);
        wg.weights[u] = entry.weight;
        if (roles) (*roles)[u] = entry.role;
    }
    return wg;
}

}  // namespace trilist
