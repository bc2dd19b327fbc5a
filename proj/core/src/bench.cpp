#include "trilist/bench.hpp"

#include <cstdio>

namespace trilist {

std::string to_csv_row(const BenchRecord& r) {
    char durations[96];
    std::snprintf(durations, sizeof(durations), "%.3f,%.3f,%.3f", r.load_ms,
                  r.order_ms, r.list_ms);
    std::string row;
    row += r.dataset + ',' + r.algo + ',' + r.ordering + ',' + r.mode + ',';
    row += std::to_string(r.threads) + ',';
    row += std::to_string(r.n) + ',' + std::to_string(r.m) + ',';
    row += std::to_string(r.c_pp) + ',' + std::to_string(r.c_pm) + ',';
    row += std::to_string(r.inner_ops) + ',' + std::to_string(r.triangles) + ',';
    row += durations;
    return row;
}

}  // namespace trilist
