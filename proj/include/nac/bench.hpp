#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "nac/graph.hpp"
#include "nac/search.hpp"

namespace nac {

struct BenchInput {
    std::string id;
    Graph graph;
};

struct BenchOptions {
    int repeats = 3;
    bool first_only = false;  ///< stop at the first coloring instead of enumerating
    std::chrono::milliseconds timeout{30000};
    int jobs = 1;  ///< worker threads; work is split across graphs only
};

struct BenchRecord {
    std::string graph_id;
    int n = 0;
    int m = 0;  ///< monochromatic class count
    std::string strategy;
    std::string merge;
    int bag_size = 0;
    int repeats = 0;
    double mean_ms = 0;  ///< a timed-out run counts as the time limit
    CheckStats stats;
    bool timed_out = false;
};

/// One record per input and config, in input-major order.
std::vector<BenchRecord> run_bench(const std::vector<BenchInput>& inputs, const std::vector<SearchConfig>& configs,
                                   const BenchOptions& opts);

/// graph_id,n,m,strategy,merge,bag_size,mean_ms,mask_candidates,cycle_rejections,full_checks,found,timed_out
std::string bench_csv_header();
std::string to_csv_row(const BenchRecord& r);
std::string to_json_line(const BenchRecord& r);

}  // namespace nac
