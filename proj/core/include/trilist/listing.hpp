#ifndef TRILIST_LISTING_HPP
#define TRILIST_LISTING_HPP

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

#include "trilist/graph.hpp"
#include "trilist/ordering.hpp"
#include "trilist/oriented_view.hpp"

namespace trilist {

// Exact operation accounting for one listing run. inner_ops counts the
// innermost-loop iterations and equals c_pp for list_app, c_pm for list_apm;
// mark_ops counts boolean table set/reset operations (2m per run).
struct ListingStats {
    std::uint64_t triangle_count = 0;
    std::uint64_t inner_ops = 0;
    std::uint64_t mark_ops = 0;
    double wall_ms = 0.0;  // algorithm loops only

    void merge(const ListingStats& other) {
        triangle_count += other.triangle_count;
        inner_ops += other.inner_ops;
        mark_ops += other.mark_ops;
    }
};

// Sinks receive each triangle once as dense ids (u, v, w) with
// rank(u) < rank(v) < rank(w). Parallel runs default-construct one sink per
// lane and merge them, so sinks must be mergeable and order-insensitive.

struct CountingSink {
    std::uint64_t count = 0;
    void operator()(VertexId, VertexId, VertexId) { ++count; }
    void merge(CountingSink&& other) { count += other.count; }
};

struct CollectingSink {
    std::vector<std::array<VertexId, 3>> triangles;
    void operator()(VertexId u, VertexId v, VertexId w) {
        triangles.push_back({u, v, w});
    }
    void merge(CollectingSink&& other) {
        triangles.insert(triangles.end(), other.triangles.begin(),
                         other.triangles.end());
    }
    // Triples with ids sorted ascending, list sorted: comparable across
    // orderings and algorithms.
    std::vector<std::array<VertexId, 3>> canonical() const {
        auto result = triangles;
        for (auto& t : result) std::sort(t.begin(), t.end());
        std::sort(result.begin(), result.end());
        return result;
    }
};

namespace detail {

// Seeds w by ascending rank; marks the predecessors of w, then scans the
// successor lists of those predecessors against the table.
template <typename Sink>
void run_app_range(const OrientedView& view, VertexId rank_begin, VertexId rank_end,
                   std::vector<std::uint8_t>& table, Sink& sink, ListingStats& stats) {
    for (VertexId r = rank_begin; r < rank_end; ++r) {
        const VertexId w = view.vertex_at(r);
        const auto preds = view.predecessors(w);
        if (preds.empty()) continue;
        for (VertexId v : preds) table[v] = 1;
        for (VertexId u : preds) {
            const auto succ_u = view.successors(u);
            stats.inner_ops += succ_u.size();
            for (VertexId v : succ_u)
                if (table[v]) sink(u, v, w), ++stats.triangle_count;
        }
        for (VertexId v : preds) table[v] = 0;
        stats.mark_ops += 2 * preds.size();
    }
}

// Seeds u by ascending rank; marks the successors of u, then scans the
// successor lists of those successors against the table.
template <typename Sink>
void run_apm_range(const OrientedView& view, VertexId rank_begin, VertexId rank_end,
                   std::vector<std::uint8_t>& table, Sink& sink, ListingStats& stats) {
    for (VertexId r = rank_begin; r < rank_end; ++r) {
        const VertexId u = view.vertex_at(r);
        const auto succ_u = view.successors(u);
        if (succ_u.empty()) continue;
        for (VertexId w : succ_u) table[w] = 1;
        for (VertexId v : succ_u) {
            const auto succ_v = view.successors(v);
            stats.inner_ops += succ_v.size();
            for (VertexId w : succ_v)
                if (table[w]) sink(u, v, w), ++stats.triangle_count;
        }
        for (VertexId w : succ_u) table[w] = 0;
        stats.mark_ops += 2 * succ_u.size();
    }
}

template <typename Runner, typename Sink>
ListingStats run_single(const OrientedView& view, Runner runner, Sink& sink) {
    ListingStats stats;
    std::vector<std::uint8_t> table(view.vertex_count(), 0);
    const auto t0 = std::chrono::steady_clock::now();
    runner(view, VertexId{0}, view.vertex_count(), table, sink, stats);
    const auto t1 = std::chrono::steady_clock::now();
    stats.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return stats;
}

// Outer-loop parallelism: lanes grab rank blocks from a shared counter; each
// lane owns a private table, sink and stats, merged at the end.
template <typename Runner, typename Sink>
ListingStats run_parallel(const OrientedView& view, Runner runner, Sink& sink,
                          unsigned threads) {
    const VertexId n = view.vertex_count();
    constexpr VertexId kBlock = 1024;
    std::atomic<VertexId> next_block{0};
    std::mutex merge_mutex;
    ListingStats total;

    const auto t0 = std::chrono::steady_clock::now();
    auto worker = [&] {
        ListingStats local;
        Sink local_sink;
        std::vector<std::uint8_t> table(n, 0);
        for (;;) {
            const VertexId begin = next_block.fetch_add(kBlock);
            if (begin >= n) break;
            const VertexId end = static_cast<VertexId>(
                std::min<std::uint64_t>(n, std::uint64_t{begin} + kBlock));
            runner(view, begin, end, table, local_sink, local);
        }
        std::lock_guard<std::mutex> lock(merge_mutex);
        total.merge(local);
        sink.merge(std::move(local_sink));
    };

    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    const auto t1 = std::chrono::steady_clock::now();
    total.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return total;
}

}  // namespace detail

// Lists every triangle exactly once with rank(u) < rank(v) < rank(w).
// inner_ops = c_pp(pi). Single-threaded emission order is deterministic:
// seeds by ascending rank, neighbors by ascending rank.
template <typename Sink>
ListingStats list_app(const OrientedView& view, Sink&& sink) {
    return detail::run_single(
        view, [](auto&&... args) { detail::run_app_range(std::forward<decltype(args)>(args)...); }, sink);
}

// Same emission contract; inner_ops = c_pm(pi).
template <typename Sink>
ListingStats list_apm(const OrientedView& view, Sink&& sink) {
    return detail::run_single(
        view, [](auto&&... args) { detail::run_apm_range(std::forward<decltype(args)>(args)...); }, sink);
}

template <typename Sink>
ListingStats list_app(const Graph& g, const Ordering& pi, Sink&& sink) {
    return list_app(OrientedView(g, pi), sink);
}

template <typename Sink>
ListingStats list_apm(const Graph& g, const Ordering& pi, Sink&& sink) {
    return list_apm(OrientedView(g, pi), sink);
}

// Parallel variants; triangle_count/inner_ops/mark_ops equal the
// single-threaded run, emission order is unspecified.
template <typename Sink>
ListingStats list_app_parallel(const OrientedView& view, Sink& sink, unsigned threads) {
    if (threads <= 1) return list_app(view, sink);
    return detail::run_parallel(
        view, [](auto&&... args) { detail::run_app_range(std::forward<decltype(args)>(args)...); }, sink, threads);
}

template <typename Sink>
ListingStats list_apm_parallel(const OrientedView& view, Sink& sink, unsigned threads) {
    if (threads <= 1) return list_apm(view, sink);
    return detail::run_parallel(
        view, [](auto&&... args) { detail::run_apm_range(std::forward<decltype(args)>(args)...); }, sink, threads);
}

}  // namespace trilist

#endif  // TRILIST_LISTING_HPP
