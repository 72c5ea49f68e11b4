#include "nac/bench.hpp"

#include <atomic>
#include <cstdio>
#include <thread>

#include <json.hpp>

#include "nac/mono_classes.hpp"

namespace nac {

namespace {

BenchRecord run_one(const BenchInput& in, int m, const SearchConfig& base, const BenchOptions& opts) {
    BenchRecord rec;
    rec.graph_id = in.id;
    rec.n = in.graph.vertex_count();
    rec.m = m;
    rec.strategy = to_string(base.strategy);
    rec.merge = to_string(base.merge);
    rec.bag_size = base.bag_size;
    rec.repeats = opts.repeats;

    SearchConfig cfg = base;
    cfg.timeout = opts.timeout;
    double total = 0;
    for (int rep = 0; rep < opts.repeats; ++rep) {
        const auto start = std::chrono::steady_clock::now();
        auto stream = enumerate(in.graph, cfg);
        bool timed_out = false;
        try {
            while (stream.next())
                if (opts.first_only)
                    break;
        } catch (const SearchTimeout&) {
            timed_out = true;
        }
        const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
        if (rep == 0)
            rec.stats = stream.stats();
        if (timed_out) {
            // a run over the limit counts as the limit, and so do the remaining repeats
            rec.timed_out = true;
            total += static_cast<double>(opts.timeout.count()) * (opts.repeats - rep);
            break;
        }
        total += elapsed.count();
    }
    rec.mean_ms = total / opts.repeats;
    return rec;
}

}  // namespace

std::vector<BenchRecord> run_bench(const std::vector<BenchInput>& inputs, const std::vector<SearchConfig>& configs,
                                   const BenchOptions& opts) {
    if (opts.repeats < 1)
        throw ContractError("repeats must be at least 1");
    if (opts.jobs < 1)
        throw ContractError("jobs must be at least 1");
    for (const auto& c : configs)
        c.validate();
    for (const auto& in : inputs)
        if (in.graph.edge_count() == 0)
            throw ContractError("graph " + in.id + " has no edges");

    std::vector<BenchRecord> out(inputs.size() * configs.size());
    auto work = [&](std::size_t i) {
        const int m = monochromatic_classes(inputs[i].graph).size();
        for (std::size_t c = 0; c < configs.size(); ++c)
            out[i * configs.size() + c] = run_one(inputs[i], m, configs[c], opts);
    };
    if (opts.jobs == 1) {
        for (std::size_t i = 0; i < inputs.size(); ++i)
            work(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    for (int t = 0; t < opts.jobs; ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next++) < inputs.size();) {
                try {
                    work(i);
                } catch (...) {
                    if (!failed.exchange(true))
                        failure = std::current_exception();
                }
            }
        });
    for (auto& th : pool)
        th.join();
    if (failure)
        std::rethrow_exception(failure);
    return out;
}

std::string bench_csv_header() {
    return "graph_id,n,m,strategy,merge,bag_size,mean_ms,mask_candidates,cycle_rejections,full_checks,found,timed_out";
}

std::string to_csv_row(const BenchRecord& r) {
    char ms[64];
    std::snprintf(ms, sizeof ms, "%.3f", r.mean_ms);
    std::string id = r.graph_id;
    if (id.find_first_of(",\"\n") != std::string::npos) {
        std::string q = "\"";
        for (char ch : id)
            q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
        id = q + "\"";
    }
    return id + ',' + std::to_string(r.n) + ',' + std::to_string(r.m) + ',' + r.strategy + ',' + r.merge + ',' +
           std::to_string(r.bag_size) + ',' + ms + ',' + std::to_string(r.stats.mask_candidates) + ',' +
           std::to_string(r.stats.cycle_rejections) + ',' + std::to_string(r.stats.full_checks) + ',' +
           std::to_string(r.stats.found) + ',' + (r.timed_out ? "true" : "false");
}

std::string to_json_line(const BenchRecord& r) {
    nlohmann::ordered_json j;
    j["graph_id"] = r.graph_id;
    j["n"] = r.n;
    j["m"] = r.m;
    j["strategy"] = r.strategy;
    j["merge"] = r.merge;
    j["bag_size"] = r.bag_size;
    j["repeats"] = r.repeats;
    j["mean_ms"] = r.mean_ms;
    j["mask_candidates"] = r.stats.mask_candidates;
    j["cycle_rejections"] = r.stats.cycle_rejections;
    j["full_checks"] = r.stats.full_checks;
    j["found"] = r.stats.found;
    j["timed_out"] = r.timed_out;
    return j.dump();
}

}  // namespace nac
