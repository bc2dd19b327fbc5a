// trilist command line: triangle listing with order-induced costs, ordering
// heuristics, a benchmark matrix, and hardness gadget construction/verification.
//
// Subcommands: order, cost, list, bench, gadget, gen. Machine-readable output
// is CSV on stdout; informational lines are '#'-prefixed. Exit code 0 means
// success and, for --verify runs, that every requested verification passed
// (2 = verification refused because an oracle guard was exceeded).

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trilist/bench.hpp"
#include "trilist/cost.hpp"
#include "trilist/gadgets.hpp"
#include "trilist/graph.hpp"
#include "trilist/listing.hpp"
#include "trilist/neigh.hpp"
#include "trilist/oracle.hpp"
#include "trilist/ordering.hpp"
#include "trilist/oriented_view.hpp"

namespace {

using namespace trilist;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct OrderSpec {
    std::string method = "degree";  // or "file"
    std::string file;
    std::uint64_t seed = 0;
    double eps = 1e-2;
    std::uint32_t max_sweeps = 50;
    std::string neigh_init = "split";
};

const std::vector<std::string> kMethods = {"identity", "random", "degree",
                                           "core",     "split",  "check", "neigh"};

Ordering compute_order(const Graph& g, const OrderSpec& spec) {
    if (spec.method == "file") return read_ordering_file(g, spec.file);
    if (spec.method == "identity") return identity_order(g);
    if (spec.method == "random") return random_order(g, spec.seed);
    if (spec.method == "degree") return degree_order(g);
    if (spec.method == "core") return core_order(g);
    if (spec.method == "split") return split_order(g);
    if (spec.method == "check") return check_order(g);
    if (spec.method == "neigh") {
        OrderSpec init = spec;
        init.method = spec.neigh_init;
        return neigh_order(g, compute_order(g, init), spec.eps, spec.max_sweeps);
    }
    throw CLI::ValidationError("unknown ordering method: " + spec.method);
}

// Oracle guards, overridable through TRILIST_GUARD_N.
VertexId guard_n(VertexId fallback) {
    if (const char* env = std::getenv("TRILIST_GUARD_N"))
        return static_cast<VertexId>(std::stoul(env));
    return fallback;
}

std::string dataset_name(const std::string& path) {
    const auto slash = path.find_last_of('/');
    return slash == std::string::npos ? path : path.substr(slash + 1);
}

Graph load_graph_reporting(const std::string& path) {
    NormalizeStats stats;
    Graph g = load_edgelist_file(path, &stats);
    if (stats.loops_removed || stats.duplicates_removed)
        std::cout << "# normalize: dropped " << stats.loops_removed
                  << " loops, merged " << stats.duplicates_removed
                  << " duplicates\n";
    return g;
}

void print_cost_header() {
    std::cout << "dataset,ordering,n,m,c_pp,c_pm,c_mm,sum_deg_sq,order_ms\n";
}

void print_cost_row(const std::string& dataset, const std::string& ordering,
                    const Graph& g, const CostReport& report, double order_ms) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", order_ms);
    std::cout << dataset << ',' << ordering << ',' << g.vertex_count() << ','
              << g.edge_count() << ',' << report.c_pp << ',' << report.c_pm << ','
              << report.c_mm << ',' << report.sum_deg_sq << ',' << buf << '\n';
}

BenchRecord run_listing(const Graph& g, const Ordering& pi, const std::string& dataset,
                        const std::string& algo, const std::string& ordering_name,
                        const std::string& mode, unsigned threads, double load_ms,
                        double order_ms, CollectingSink* collect) {
    BenchRecord rec;
    rec.dataset = dataset;
    rec.algo = algo;
    rec.ordering = ordering_name;
    rec.mode = mode;
    rec.threads = threads;
    rec.n = g.vertex_count();
    rec.m = g.edge_count();
    rec.load_ms = load_ms;
    rec.order_ms = order_ms;

    const auto report = cost_report(g, pi);
    rec.c_pp = report.c_pp;
    rec.c_pm = report.c_pm;

    const auto t0 = Clock::now();
    const OrientedView view(g, pi);
    ListingStats stats;
    if (collect) {
        if (algo == "app")
            stats = list_app_parallel(view, *collect, threads);
        else
            stats = list_apm_parallel(view, *collect, threads);
    } else {
        CountingSink sink;
        if (algo == "app")
            stats = list_app_parallel(view, sink, threads);
        else
            stats = list_apm_parallel(view, sink, threads);
    }
    rec.list_ms = ms_since(t0);
    rec.inner_ops = stats.inner_ops;
    rec.triangles = stats.triangle_count;
    return rec;
}

int cmd_order(const std::string& graph_path, const OrderSpec& spec,
              std::string out_path) {
    const auto t_load = Clock::now();
    const Graph g = load_graph_reporting(graph_path);
    const double load_ms = ms_since(t_load);

    const auto t_order = Clock::now();
    Ordering pi;
    std::uint32_t sweeps = 0;
    VertexId degeneracy = 0;
    if (spec.method == "core") {
        auto decomposition = core_decompose(g);
        degeneracy = decomposition.degeneracy;
        pi = std::move(decomposition.order);
    } else if (spec.method == "neigh") {
        OrderSpec init = spec;
        init.method = spec.neigh_init;
        NeighOptions options;
        options.epsilon = spec.eps;
        options.max_sweeps = spec.max_sweeps;
        auto result = neigh_optimize(g, compute_order(g, init), options);
        sweeps = result.sweeps;
        pi = std::move(result.ordering);
    } else {
        pi = compute_order(g, spec);
    }
    const double order_ms = ms_since(t_order);

    if (out_path.empty()) out_path = graph_path + "." + spec.method + ".ord";
    write_ordering_file(g, pi, out_path);

    std::cout << "# wrote " << out_path << " (load " << load_ms << " ms)\n";
    if (spec.method == "core") std::cout << "# degeneracy " << degeneracy << '\n';
    if (spec.method == "neigh") std::cout << "# sweeps " << sweeps << '\n';
    print_cost_header();
    print_cost_row(dataset_name(graph_path), spec.method, g, cost_report(g, pi),
                   order_ms);
    return 0;
}

int cmd_cost(const std::string& graph_path, const OrderSpec& spec) {
    const Graph g = load_graph_reporting(graph_path);
    const auto t_order = Clock::now();
    const Ordering pi = compute_order(g, spec);
    const double order_ms = ms_since(t_order);
    print_cost_header();
    const std::string name = spec.method == "file" ? dataset_name(spec.file) : spec.method;
    print_cost_row(dataset_name(graph_path), name, g, cost_report(g, pi), order_ms);
    return 0;
}

int cmd_list(const std::string& graph_path, const OrderSpec& spec,
             const std::string& algo, const std::string& mode, unsigned threads,
             const std::string& sink_mode, const std::string& triangles_path) {
    const auto t_load = Clock::now();
    const Graph g = load_graph_reporting(graph_path);
    const double load_ms = ms_since(t_load);

    const auto t_order = Clock::now();
    const Ordering pi = compute_order(g, spec);
    const double order_ms = ms_since(t_order);

    const std::string ordering_name =
        spec.method == "file" ? dataset_name(spec.file) : spec.method;
    const bool collect = sink_mode == "collect" || !triangles_path.empty();

    CollectingSink collector;
    const BenchRecord rec =
        run_listing(g, pi, dataset_name(graph_path), algo, ordering_name, mode,
                    threads, load_ms, order_ms, collect ? &collector : nullptr);

    if (!triangles_path.empty()) {
        // original labels, rank-ascending inside each triple; row order is the
        // single-threaded emission order when threads == 1
        std::ofstream out(triangles_path);
        if (!out) throw std::runtime_error("cannot write " + triangles_path);
        for (const auto& [u, v, w] : collector.triangles)
            out << g.label_of(u) << ' ' << g.label_of(v) << ' ' << g.label_of(w)
                << '\n';
    }

    std::cout << "# sink " << (collect ? "collect" : "count") << '\n';
    std::cout << kBenchCsvHeader << '\n' << to_csv_row(rec) << '\n';
    if (mode == "full")
        std::cout << "# full_time_ms "
                  << rec.load_ms + rec.order_ms + rec.list_ms << '\n';
    return 0;
}

int cmd_bench(const std::string& graph_path, std::vector<std::string> orderings,
              std::vector<std::string> algos, unsigned repeats, unsigned threads,
              std::uint64_t seed) {
    const auto t_load = Clock::now();
    const Graph g = load_graph_reporting(graph_path);
    const double load_ms = ms_since(t_load);

    if (orderings.empty()) orderings = kMethods;
    if (algos.empty()) algos = {"app", "apm"};

    std::cout << kBenchCsvHeader << '\n';
    for (const auto& method : orderings) {
        OrderSpec spec;
        spec.method = method;
        spec.seed = seed;
        const auto t_order = Clock::now();
        const Ordering pi = compute_order(g, spec);
        const double order_ms = ms_since(t_order);
        for (const auto& algo : algos)
            for (unsigned rep = 0; rep < repeats; ++rep)
                std::cout << to_csv_row(run_listing(g, pi, dataset_name(graph_path),
                                                    algo, method, "full", threads,
                                                    load_ms, order_ms, nullptr))
                          << '\n';
    }
    return 0;
}

void emit_gadget(const LabeledGadget& gadget, const std::string& prefix) {
    std::ofstream edges(prefix + ".edges");
    std::ofstream labels(prefix + ".labels");
    if (!edges || !labels)
        throw std::runtime_error("cannot write gadget files at prefix " + prefix);
    write_gadget(gadget, edges, labels);
    std::cout << "# wrote " << prefix << ".edges and " << prefix << ".labels\n";
}

int verification_verdict(bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS " : "FAIL ") << detail << '\n';
    return pass ? 0 : 1;
}

int cmd_gadget_nae(const std::string& formula_path, const std::string& prefix,
                   bool verify) {
    const NaeFormula f = parse_nae_formula_file(formula_path);
    const LabeledGadget gadget = nae_graph(f);
    emit_gadget(gadget, prefix);
    if (!verify) return 0;
    const VertexId guard = guard_n(kExhaustiveOrderGuard);
    try {
        const bool sat = nae_satisfiable(f);
        const auto result = min_cost_exhaustive(gadget.weighted.graph, CostKind::pm,
                                                {}, guard);
        const bool below = result.min_cost <= gadget.threshold;
        return verification_verdict(
            sat == below, "nae: satisfiable=" + std::to_string(sat) +
                              " min_pm=" + std::to_string(result.min_cost) +
                              " threshold=" + std::to_string(gadget.threshold));
    } catch (const GuardExceeded& e) {
        std::cout << "REFUSED " << e.what() << " (construction still emitted)\n";
        return 2;
    }
}

int cmd_gadget_ld(std::uint32_t d, const std::string& prefix, bool verify) {
    const LabeledGadget gadget = ld_gadget(d);
    emit_gadget(gadget, prefix);
    if (!verify) return 0;
    const VertexId guard = guard_n(kExhaustiveOrderGuard);
    try {
        const auto plain =
            min_cost_exhaustive(gadget.weighted.graph, CostKind::pp, {}, guard);
        WeightedGraph weighted = gadget.weighted;
        weighted.weights[find_role(gadget, "e")] = 1;
        const auto lifted = min_cost_exhaustive(gadget.weighted.graph, CostKind::pp,
                                                weighted.weights, guard);
        // a unit weight on e lifts the optimum by 2d+1, except at d=1 where
        // the clique-first order ends with e at out-degree 0 and pays only 1
        const std::uint64_t lift = d == 1 ? 1 : 2 * std::uint64_t{d} + 1;
        const bool pass = plain.min_cost == gadget.threshold &&
                          lifted.min_cost == gadget.threshold + lift;
        return verification_verdict(
            pass, "ld: min=" + std::to_string(plain.min_cost) + " expected=" +
                      std::to_string(gadget.threshold) + " weighted_min=" +
                      std::to_string(lifted.min_cost) + " expected=" +
                      std::to_string(gadget.threshold + lift));
    } catch (const GuardExceeded& e) {
        std::cout << "REFUSED " << e.what() << " (construction still emitted)\n";
        return 2;
    }
}

int cmd_gadget_setcover(const std::string& instance_path, const std::string& prefix,
                        bool verify) {
    const SetCoverInstance inst = parse_set_cover_file(instance_path);
    const LabeledGadget gadget = setcover_graph(inst);
    emit_gadget(gadget, prefix);
    if (!verify) return 0;
    const VertexId guard = guard_n(kExhaustiveOrderGuard);
    try {
        const std::uint32_t cover = min_set_cover(inst);
        const auto result = min_cost_exhaustive(
            gadget.weighted.graph, CostKind::pp, gadget.weighted.weights, guard);
        const bool below = result.min_cost <= gadget.threshold;
        const bool coverable = cover <= inst.budget;
        return verification_verdict(
            below == coverable,
            "setcover: min_cover=" + std::to_string(cover) + " k=" +
                std::to_string(inst.budget) + " min_cost=" +
                std::to_string(result.min_cost) + " V=" +
                std::to_string(gadget.threshold));
    } catch (const GuardExceeded& e) {
        std::cout << "REFUSED " << e.what() << " (construction still emitted)\n";
        return 2;
    }
}

int cmd_gadget_weight2plain(const std::string& edges_path, const std::string& labels_path,
                            const std::string& prefix, bool verify) {
    std::ifstream edges_in(edges_path);
    std::ifstream labels_in(labels_path);
    if (!edges_in) throw std::runtime_error("cannot open " + edges_path);
    if (!labels_in) throw std::runtime_error("cannot open " + labels_path);
    std::vector<std::string> roles;
    const WeightedGraph wg = read_weighted_graph(edges_in, labels_in, &roles);
    const WeightlessReduction reduction = weighted_to_weightless(wg);

    {
        std::ofstream edges(prefix + ".edges");
        std::ofstream labels(prefix + ".labels");
        if (!edges || !labels)
            throw std::runtime_error("cannot write gadget files at prefix " + prefix);
        write_edgelist(reduction.graph, edges);
        for (VertexId u = 0; u < reduction.graph.vertex_count(); ++u) {
            const bool original = u < wg.graph.vertex_count();
            labels << reduction.graph.label_of(u) << ' '
                   << (original ? roles[u] : "gadget") << " 0\n";
        }
    }
    std::cout << "# wrote " << prefix << ".edges and " << prefix << ".labels\n";
    std::cout << "# cost_offset " << reduction.cost_offset << " attachments "
              << reduction.attachments.size() << '\n';
    if (!verify) return 0;

    const VertexId guard = guard_n(kExhaustiveOrderGuard);
    try {
        const auto weighted =
            min_cost_exhaustive(wg.graph, CostKind::pp, wg.weights, guard);
        const auto weightless =
            min_cost_exhaustive(reduction.graph, CostKind::pp, {}, guard);
        const bool pass =
            weightless.min_cost == weighted.min_cost + reduction.cost_offset;
        return verification_verdict(
            pass, "weight2plain: weighted_min=" + std::to_string(weighted.min_cost) +
                      " offset=" + std::to_string(reduction.cost_offset) +
                      " weightless_min=" + std::to_string(weightless.min_cost));
    } catch (const GuardExceeded& e) {
        std::cout << "REFUSED " << e.what() << '\n';
        return 2;
    }
}

int cmd_gen(VertexId n, std::uint64_t m, std::uint64_t seed, const std::string& out) {
    const Graph g = gen_gnm(n, m, seed);
    write_edgelist_file(g, out);
    std::cout << "# wrote " << out << " n=" << g.vertex_count()
              << " m=" << g.edge_count() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"triangle listing with order-induced costs"};
    app.require_subcommand(1);

    std::string graph_path, out_path, order_file, triangles_path;
    OrderSpec spec;
    std::string algo = "apm", mode = "mere", sink_mode = "count";
    unsigned threads = 1, repeats = 1;
    std::vector<std::string> orderings, algos;

    auto add_order_options = [&](CLI::App* cmd, bool with_file) {
        cmd->add_option("--seed", spec.seed, "seed for the random ordering");
        cmd->add_option("--eps", spec.eps, "neigh relative improvement threshold");
        cmd->add_option("--max-sweeps", spec.max_sweeps, "neigh sweep cap");
        cmd->add_option("--init", spec.neigh_init, "neigh initial ordering method")
            ->check(CLI::IsMember({"identity", "random", "degree", "core", "split",
                                   "check"}));
        if (with_file)
            cmd->add_option("--order-file", order_file,
                            "read the ordering from a file instead");
    };

    auto* order_cmd = app.add_subcommand("order", "compute an ordering, write it, print its costs");
    order_cmd->add_option("graph", graph_path, "edge list file")->required();
    order_cmd->add_option("method", spec.method, "ordering method")
        ->required()
        ->check(CLI::IsMember(kMethods));
    order_cmd->add_option("-o,--out", out_path, "ordering output path");
    add_order_options(order_cmd, false);

    auto* cost_cmd = app.add_subcommand("cost", "print the cost report of a graph+ordering");
    cost_cmd->add_option("graph", graph_path)->required();
    cost_cmd->add_option("--order", spec.method, "ordering method")
        ->check(CLI::IsMember(kMethods));
    add_order_options(cost_cmd, true);

    auto* list_cmd = app.add_subcommand("list", "list triangles, print a CSV record");
    list_cmd->add_option("graph", graph_path)->required();
    list_cmd->add_option("--order", spec.method, "ordering method")
        ->check(CLI::IsMember(kMethods));
    list_cmd->add_option("--algo", algo)->check(CLI::IsMember({"app", "apm"}));
    list_cmd->add_option("--mode", mode)->check(CLI::IsMember({"mere", "full"}));
    list_cmd->add_option("--threads", threads);
    list_cmd->add_option("--sink", sink_mode)->check(CLI::IsMember({"count", "collect"}));
    list_cmd->add_option("--out", triangles_path, "write triangles as label triples");
    add_order_options(list_cmd, true);

    auto* bench_cmd = app.add_subcommand("bench", "ordering x algorithm matrix, CSV per run");
    bench_cmd->add_option("graph", graph_path)->required();
    bench_cmd->add_option("--orders", orderings, "orderings (default: all)")
        ->delimiter(',');
    bench_cmd->add_option("--algos", algos, "algorithms (default: app,apm)")
        ->delimiter(',');
    bench_cmd->add_option("--repeats", repeats);
    bench_cmd->add_option("--threads", threads);
    bench_cmd->add_option("--seed", spec.seed);

    auto* gadget_cmd = app.add_subcommand("gadget", "construct and verify reduction gadgets");
    gadget_cmd->require_subcommand(1);
    std::string instance_path, labels_path, prefix = "gadget";
    bool verify = false;
    std::uint32_t ld_d = 1;

    auto* nae_cmd = gadget_cmd->add_subcommand("nae", "satisfiability gadget");
    nae_cmd->add_option("formula", instance_path)->required();
    auto* ld_cmd = gadget_cmd->add_subcommand("ld", "clique-plus-fan weight gadget");
    ld_cmd->add_option("d", ld_d)->required();
    auto* sc_cmd = gadget_cmd->add_subcommand("setcover", "set cover gadget");
    sc_cmd->add_option("instance", instance_path)->required();
    auto* w2p_cmd = gadget_cmd->add_subcommand("weight2plain",
                                               "expand vertex weights into gadgets");
    w2p_cmd->add_option("edges", instance_path)->required();
    w2p_cmd->add_option("labels", labels_path)->required();
    for (auto* cmd : {nae_cmd, ld_cmd, sc_cmd, w2p_cmd}) {
        cmd->add_flag("--verify", verify, "check the construction with the exhaustive oracle");
        cmd->add_option("--out", prefix, "output file prefix");
    }

    auto* gen_cmd = app.add_subcommand("gen", "write a seeded uniform random graph");
    VertexId gen_vertices = 0;
    std::uint64_t gen_edges = 0, gen_seed = 0;
    gen_cmd->add_option("n", gen_vertices)->required();
    gen_cmd->add_option("m", gen_edges)->required();
    gen_cmd->add_option("seed", gen_seed)->required();
    gen_cmd->add_option("-o,--out", out_path, "output path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (order_cmd->parsed()) return cmd_order(graph_path, spec, out_path);
        if (cost_cmd->parsed() || list_cmd->parsed()) {
            if (!order_file.empty()) {
                spec.method = "file";
                spec.file = order_file;
            }
            if (cost_cmd->parsed()) return cmd_cost(graph_path, spec);
            return cmd_list(graph_path, spec, algo, mode, threads, sink_mode,
                            triangles_path);
        }
        if (bench_cmd->parsed())
            return cmd_bench(graph_path, orderings, algos, repeats, threads, spec.seed);
        if (gadget_cmd->parsed()) {
            if (nae_cmd->parsed()) return cmd_gadget_nae(instance_path, prefix, verify);
            if (ld_cmd->parsed()) return cmd_gadget_ld(ld_d, prefix, verify);
            if (sc_cmd->parsed()) return cmd_gadget_setcover(instance_path, prefix, verify);
            return cmd_gadget_weight2plain(instance_path, labels_path, prefix, verify);
        }
        if (gen_cmd->parsed()) return cmd_gen(gen_vertices, gen_edges, gen_seed, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
