#include "trilist/neigh.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "trilist/cost.hpp"

namespace trilist {

namespace {

// Total order over vertices as a doubly-chained sequence with O(1) moves.
// Wide integer labels give O(1) rank comparison between moves; labels are
// re-spread (and thereby integer ranks re-materialized) at every sweep end
// and whenever an insertion gap runs out.
class RelocatableSequence {
public:
    explicit RelocatableSequence(const Ordering& pi)
        : n_(pi.size()),
          next_(static_cast<std::size_t>(n_) + 1),
          prev_(static_cast<std::size_t>(n_) + 1),
          label_(n_) {
        VertexId cursor = sentinel();
        for (VertexId r = 0; r < n_; ++r) {
            const VertexId v = pi.vertex_at(r);
            next_[cursor] = v;
            prev_[v] = cursor;
            cursor = v;
        }
        next_[cursor] = sentinel();
        prev_[sentinel()] = cursor;
        relabel();
    }

    std::uint64_t label(VertexId v) const { return label_[v]; }

    void unlink(VertexId v) {
        next_[prev_[v]] = next_[v];
        prev_[next_[v]] = prev_[v];
    }

    void insert_after(VertexId anchor, VertexId v) {
        const VertexId after = next_[anchor];
        std::uint64_t lo = anchor == sentinel() ? 0 : label_[anchor];
        std::uint64_t hi = after == sentinel() ? lo + 2 * kGap : label_[after];
        if (hi - lo < 2) {
            relabel();
            lo = anchor == sentinel() ? 0 : label_[anchor];
            hi = after == sentinel() ? lo + 2 * kGap : label_[after];
        }
        label_[v] = lo + (hi - lo) / 2;
        next_[anchor] = v;
        prev_[v] = anchor;
        next_[v] = after;
        prev_[after] = v;
    }

    void insert_before(VertexId anchor, VertexId v) { insert_after(prev_[anchor], v); }

    void relabel() {
        std::uint64_t l = kGap;
        for (VertexId v = next_[sentinel()]; v != sentinel(); v = next_[v]) {
            label_[v] = l;
            l += kGap;
        }
    }

    Ordering materialize() const {
        std::vector<VertexId> order;
        order.reserve(n_);
        for (VertexId v = next_[sentinel()]; v != sentinel(); v = next_[v])
            order.push_back(v);
        return Ordering::from_sequence(std::move(order));
    }

private:
    VertexId sentinel() const { return n_; }

    static constexpr std::uint64_t kGap = std::uint64_t{1} << 32;

    VertexId n_;
    std::vector<VertexId> next_, prev_;
    std::vector<std::uint64_t> label_;
};

}  // namespace

NeighResult neigh_optimize(const Graph& g, const Ordering& initial,
                           const NeighOptions& options, const RelocationHook& hook) {
    if (initial.size() != g.vertex_count())
        throw std::invalid_argument("neigh: ordering does not match graph");
    if (options.epsilon < 0)
        throw std::invalid_argument("neigh: epsilon must be non-negative");

    const VertexId n = g.vertex_count();
    NeighResult result;
    result.initial_cpm = cost_report(g, initial).c_pm;

    RelocatableSequence seq(initial);
    std::vector<VertexId> out_deg(n, 0);
    for (VertexId u = 0; u < n; ++u) {
        VertexId out = 0;
        for (const VertexId v : g.neighbors(u))
            if (seq.label(u) < seq.label(v)) ++out;
        out_deg[u] = out;
    }

    std::uint64_t cpm = result.initial_cpm;
    std::vector<std::pair<std::uint64_t, VertexId>> nbr;  // (label, vertex)
    std::vector<std::int64_t> cost_at;                    // candidate costs, index p

    auto sweep = [&]() {
        for (VertexId u = 0; u < n; ++u) {
            const VertexId d = g.degree(u);
            if (d == 0) continue;

            nbr.clear();
            for (const VertexId v : g.neighbors(u)) nbr.emplace_back(seq.label(v), v);
            std::sort(nbr.begin(), nbr.end());

            const VertexId p_cur = d - out_deg[u];
            const std::int64_t term_u =
                static_cast<std::int64_t>(out_deg[u]) * static_cast<std::int64_t>(p_cur);
            const std::int64_t base = static_cast<std::int64_t>(cpm) - term_u;

            // cost_at[p] = c_pm with u just after its p-th ranked neighbor
            // (p = 0: just before its first). Only u and the neighbors whose
            // side flips change their term; everything is O(d) via running
            // sums of per-neighbor deltas.
            cost_at.assign(static_cast<std::size_t>(d) + 1, 0);
            cost_at[p_cur] = static_cast<std::int64_t>(cpm);
            std::int64_t acc = 0;
            for (VertexId p = p_cur + 1; p <= d; ++p) {
                const VertexId v = nbr[p - 1].second;  // flips to "before u"
                acc += static_cast<std::int64_t>(g.degree(v)) -
                       2 * static_cast<std::int64_t>(out_deg[v]) - 1;
                cost_at[p] = base + acc +
                             static_cast<std::int64_t>(p) * static_cast<std::int64_t>(d - p);
            }
            acc = 0;
            for (VertexId p = p_cur; p-- > 0;) {
                const VertexId v = nbr[p].second;  // flips to "after u"
                acc += 2 * static_cast<std::int64_t>(out_deg[v]) -
                       static_cast<std::int64_t>(g.degree(v)) - 1;
                cost_at[p] = base + acc +
                             static_cast<std::int64_t>(p) * static_cast<std::int64_t>(d - p);
            }

            VertexId best_p = p_cur;
            std::int64_t best_cost = static_cast<std::int64_t>(cpm);
            for (VertexId p = 0; p <= d; ++p) {
                if (cost_at[p] < best_cost) {  // strict: ties keep u in place
                    best_cost = cost_at[p];
                    best_p = p;
                }
            }
            if (best_p == p_cur) continue;

            seq.unlink(u);
            if (best_p == 0)
                seq.insert_before(nbr[0].second, u);
            else
                seq.insert_after(nbr[best_p - 1].second, u);

            if (best_p > p_cur) {
                for (VertexId i = p_cur; i < best_p; ++i) ++out_deg[nbr[i].second];
            } else {
                for (VertexId i = best_p; i < p_cur; ++i) --out_deg[nbr[i].second];
            }
            out_deg[u] = d - best_p;
            cpm = static_cast<std::uint64_t>(best_cost);

            if (hook) hook(u, cpm, seq.materialize());
        }
    };

    if (n > 0 && cpm > 0) {
        for (;;) {
            const std::uint64_t sweep_start = cpm;
            sweep();
            ++result.sweeps;
            seq.relabel();
            if (cpm == 0) break;
            if (result.sweeps >= options.max_sweeps) break;
            if (!(static_cast<double>(cpm) <
                  (1.0 - options.epsilon) * static_cast<double>(sweep_start)))
                break;
        }
    }

    result.final_cpm = cpm;
    result.ordering = seq.materialize();
    if (cost_report(g, result.ordering).c_pm != cpm)
        throw std::logic_error("neigh: maintained cost diverged from recomputation");
    return result;
}

Ordering neigh_order(const Graph& g, const Ordering& initial, double epsilon,
                     std::uint32_t max_sweeps) {
    NeighOptions options;
    options.epsilon = epsilon;
    options.max_sweeps = max_sweeps;
    return neigh_optimize(g, initial, options).ordering;
}

Ordering neigh_order(const Graph& g) { return neigh_order(g, split_order(g)); }

}  // namespace trilist
