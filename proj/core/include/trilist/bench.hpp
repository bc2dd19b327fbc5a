#ifndef TRILIST_BENCH_HPP
#define TRILIST_BENCH_HPP

#include <cstdint>
#include <string>

namespace trilist {

// One benchmark result row. inner_ops equals c_pp for algo "app" and c_pm for
// algo "apm"; full time = load_ms + order_ms + list_ms.
struct BenchRecord {
    std::string dataset;
    std::string algo;      // "app" | "apm"
    std::string ordering;  // method or ordering-file name
    std::string mode;      // "mere" | "full"
    unsigned threads = 1;
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    std::uint64_t c_pp = 0;
    std::uint64_t c_pm = 0;
    std::uint64_t inner_ops = 0;
    std::uint64_t triangles = 0;
    double load_ms = 0.0;
    double order_ms = 0.0;
    double list_ms = 0.0;
};

inline constexpr const char* kBenchCsvHeader =
    "dataset,algo,ordering,mode,threads,n,m,c_pp,c_pm,inner_ops,triangles,"
    "load_ms,order_ms,list_ms";

std::string to_csv_row(const BenchRecord& record);

}  // namespace trilist

#endif  // TRILIST_BENCH_HPP
