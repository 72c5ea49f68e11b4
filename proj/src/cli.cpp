#include "nac/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nac/bench.hpp"
#include "nac/fixtures.hpp"
#include "nac/graph.hpp"
#include "nac/mono_classes.hpp"
#include "nac/sat_reduction.hpp"
#include "nac/search.hpp"

namespace nac {

namespace {

using json = nlohmann::ordered_json;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_all(const std::string& path, std::istream& in) {
    if (path == "-") {
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw InputError("cannot read " + path);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

std::string detect_format(const std::string& path, const std::string& fmt) {
    if (fmt != "auto")
        return fmt;
    auto ends = [&](const char* ext) {
        const std::string e(ext);
        return path.size() >= e.size() && path.compare(path.size() - e.size(), e.size(), e) == 0;
    };
    if (ends(".g6") || ends(".graph6"))
        return "graph6";
    if (ends(".cnf"))
        return "cnf";
    return "edgelist";
}

std::vector<LabelledGraph> load_graphs(const std::string& path, const std::string& fmt, std::istream& in) {
    const std::string text = read_all(path, in);
    const std::string kind = detect_format(path, fmt);
    if (kind == "graph6")
        return parse_graph6_file(text);
    if (kind == "edgelist")
        return {parse_edge_list(text)};
    throw InputError("unsupported graph format '" + kind + "'");
}

struct GraphSource {
    std::string path;
    std::string g6;
    std::string format = "auto";
    std::size_t index = 0;

    void add(CLI::App* sub) {
        sub->add_option("graph", path, "graph file (.g6 or edge list; - for standard input)");
        sub->add_option("--g6", g6, "graph given inline in graph6");
        sub->add_option("--format", format, "input format")->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
        sub->add_option("--index", index, "graph to use from a multi-graph graph6 file");
    }
    LabelledGraph load(std::istream& in) const {
        if (!g6.empty() && !path.empty())
            throw InputError("give either a graph file or --g6, not both");
        if (!g6.empty())
            return parse_graph6(g6);
        if (path.empty())
            throw InputError("no graph given");
        auto gs = load_graphs(path, format, in);
        if (index >= gs.size())
            throw InputError("graph index " + std::to_string(index) + " out of range (" + std::to_string(gs.size()) +
                             " graphs)");
        return std::move(gs[index]);
    }
};

std::string strategy_name(std::string s) {
    return s == "naive" ? "none" : s;
}

struct SearchArgs {
    std::string strategy = "neighbors-degree";
    std::string merge = "linear";
    int bag_size = 4;
    int cycles_depth = 4;
    int cycles_per_class = 2;
    std::uint64_t seed = 0;
    bool no_blocks = false;
    bool no_cycles = false;
    long long timeout_ms = 0;

    void add(CLI::App* sub, bool with_strategy = true) {
        if (with_strategy) {
            sub->add_option("--strategy", strategy, "none (alias naive), neighbors or neighbors-degree");
            sub->add_option("--merge", merge, "linear or shared-vertices");
            sub->add_option("--bag-size", bag_size, "classes per bag");
        }
        sub->add_option("--cycles-depth", cycles_depth, "longest cycle used by the pre-check");
        sub->add_option("--cycles-per-class", cycles_per_class, "cycles kept per class");
        sub->add_option("--seed", seed, "decomposition seed");
        sub->add_flag("--no-blocks", no_blocks, "do not split into blocks");
        sub->add_flag("--no-cycles", no_cycles, "disable the cycle pre-check");
        sub->add_option("--timeout-ms", timeout_ms, "wall-clock limit (0 = none)");
    }
    SearchConfig config() const {
        SearchConfig c;
        try {
            c.strategy = parse_strategy(strategy_name(strategy));
            c.merge = parse_merge_strategy(merge);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
        c.bag_size = bag_size;
        c.cycles_depth = cycles_depth;
        c.cycles_per_class = cycles_per_class;
        c.seed = seed;
        c.use_blocks = !no_blocks;
        c.use_cycles = !no_cycles;
        if (timeout_ms > 0)
            c.timeout = std::chrono::milliseconds(timeout_ms);
        return c;
    }
};

json edge_json(const LabelledGraph& lg, int e) {
    const Edge& ed = lg.graph.edge(e);
    return json::array({lg.original_ids[static_cast<std::size_t>(ed.u)], lg.original_ids[static_cast<std::size_t>(ed.v)]});
}

json coloring_json(const LabelledGraph& lg, const NacColoring& c) {
    json red = json::array(), blue = json::array();
    c.red.for_each([&](std::size_t e) { red.push_back(edge_json(lg, static_cast<int>(e))); });
    c.blue.for_each([&](std::size_t e) { blue.push_back(edge_json(lg, static_cast<int>(e))); });
    return json{{"red", red}, {"blue", blue}};
}

json stats_json(const CheckStats& s) {
    return json{{"mask_candidates", s.mask_candidates},
                {"cycle_rejections", s.cycle_rejections},
                {"full_checks", s.full_checks},
                {"found", s.found}};
}

void emit_stats(std::ostream& out, const CheckStats& s, bool timing, std::chrono::steady_clock::time_point start) {
    json j{{"stats", stats_json(s)}};
    if (timing)
        j["elapsed_ms"] =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    out << j.dump() << '\n';
}

std::pair<std::int64_t, std::int64_t> parse_rational(const std::string& s) {
    std::int64_t num = 0, den = 1;
    const auto slash = s.find('/');
    try {
        std::size_t used = 0;
        if (slash != std::string::npos) {
            num = std::stoll(s.substr(0, slash), &used);
            if (used != slash)
                throw std::invalid_argument(s);
            const std::string d = s.substr(slash + 1);
            den = std::stoll(d, &used);
            if (used != d.size())
                throw std::invalid_argument(s);
        } else {
            const auto dot = s.find('.');
            const std::string whole = s.substr(0, dot), frac = dot == std::string::npos ? "" : s.substr(dot + 1);
            if (frac.size() > 15 || (whole + frac).empty() ||
                !std::all_of(whole.begin(), whole.end(), ::isdigit) || !std::all_of(frac.begin(), frac.end(), ::isdigit))
                throw std::invalid_argument(s);
            for (std::size_t i = 0; i < frac.size(); ++i)
                den *= 10;
            num = (whole.empty() ? 0 : std::stoll(whole)) * den + (frac.empty() ? 0 : std::stoll(frac));
        }
    } catch (const std::logic_error&) {
        throw InputError("invalid rational '" + s + "'");
    }
    if (den <= 0)
        throw InputError("invalid rational '" + s + "'");
    const std::int64_t g = std::gcd(num, den);
    return {num / g, den / g};
}

std::vector<std::string> split_list(const std::vector<std::string>& items) {
    std::vector<std::string> out;
    for (const auto& it : items) {
        std::stringstream ss(it);
        std::string part;
        while (std::getline(ss, part, ','))
            if (!part.empty())
                out.push_back(part);
    }
    return out;
}

std::string base_name(const std::string& path) {
    const auto p = path.find_last_of('/');
    return p == std::string::npos ? path : path.substr(p + 1);
}

class Cli {
public:
    Cli(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out_(out), err_(err) {}

    int run(const std::vector<std::string>& args) {
        CLI::App app{"NAC-coloring search and reduction tools", "nac"};
        app.require_subcommand(1);
        build(app);
        std::vector<std::string> rev(args.rbegin(), args.rend());
        try {
            app.parse(rev);
        } catch (const CLI::CallForHelp&) {
            out_ << app.help();
            return 0;
        } catch (const CLI::CallForAllHelp&) {
            out_ << app.help("", CLI::AppFormatMode::All);
            return 0;
        } catch (const CLI::ParseError& e) {
            err_ << "error: " << e.what() << '\n';
            return 2;
        }
        try {
            return action_();
        } catch (const SearchTimeout&) {
            err_ << "error: search timed out\n";
            return 3;
        } catch (const ParseError& e) {
            err_ << "error: " << e.what() << '\n';
            return 2;
        } catch (const InputError& e) {
            err_ << "error: " << e.what() << '\n';
            return 2;
        } catch (const ContractError& e) {
            err_ << "error: " << e.what() << '\n';
            return 2;
        } catch (const OracleLimitError& e) {
            err_ << "error: " << e.what() << '\n';
            return 2;
        } catch (const std::invalid_argument& e) {
            err_ << "error: " << e.what() << '\n';
            return 2;
        }
    }

private:
    std::istream& in_;
    std::ostream& out_;
    std::ostream& err_;
    std::function<int()> action_;

    GraphSource src_;
    SearchArgs search_;
    bool stats_ = false;
    bool timing_ = false;
    long long limit_ = -1;

    // oracle
    bool count_only_ = false;
    int edge_limit_ = 22;

    // reduce
    std::string cnf_;
    std::string epsilon_;
    std::string emit_ = "json";
    bool labels_ = false;
    bool verify_ = false;
    bool pad_ = false;

    // bench
    std::vector<std::string> bench_inputs_;
    std::string bench_format_ = "auto";
    std::vector<std::string> strategies_;
    std::vector<std::string> merges_;
    std::vector<int> bag_sizes_;
    std::string family_;
    std::vector<std::string> params_;
    std::uint64_t fixture_seed_ = 0;
    int repeats_ = 3;
    long long bench_timeout_ms_ = 30000;
    bool first_ = false;
    std::string csv_;
    std::string jsonl_ = "-";
    bool strict_ = false;
    int jobs_ = 1;
    std::string group_by_;

    void build(CLI::App& app) {
        auto* ex = app.add_subcommand("exists", "print one NAC-coloring; exit 1 if there is none");
        src_.add(ex);
        search_.add(ex);
        ex->add_flag("--stats", stats_, "print check counters");
        ex->add_flag("--timing", timing_, "add elapsed time to the counters");
        ex->callback([this] { action_ = [this] { return cmd_exists(); }; });

        auto* en = app.add_subcommand("enumerate", "print NAC-colorings, one JSON object per line");
        src_.add(en);
        search_.add(en);
        en->add_option("--limit", limit_, "stop after N colorings");
        en->add_flag("--stats", stats_, "print check counters");
        en->add_flag("--timing", timing_, "add elapsed time to the counters");
        en->callback([this] { action_ = [this] { return cmd_enumerate(); }; });

        auto* co = app.add_subcommand("count", "print the number of NAC-colorings up to swapping colors");
        src_.add(co);
        search_.add(co);
        co->add_flag("--stats", stats_, "print check counters");
        co->add_flag("--timing", timing_, "add elapsed time to the counters");
        co->callback([this] { action_ = [this] { return cmd_count(); }; });

        auto* cl = app.add_subcommand("classes", "print monochromatic classes as lists of edges");
        src_.add(cl);
        cl->callback([this] { action_ = [this] { return cmd_classes(); }; });

        auto* orc = app.add_subcommand("oracle", "brute-force reference: NAC-colorings of a graph or satisfiability of a CNF");
        src_.add(orc);
        orc->add_option("--cnf", cnf_, "DIMACS file to decide instead of a graph");
        orc->add_flag("--pad-clauses", pad_, "repeat the last literal of short clauses");
        orc->add_flag("--count", count_only_, "print only the number of colorings");
        orc->add_option("--edge-limit", edge_limit_, "refuse graphs with more edges");
        orc->callback([this] { action_ = [this] { return cmd_oracle(); }; });

        auto* re = app.add_subcommand("reduce", "build the NAC-coloring instance of a 3-CNF formula");
        re->add_option("--cnf", cnf_, "DIMACS file (- for standard input)")->required();
        re->add_option("--epsilon", epsilon_, "density parameter p/q or decimal in (0, 1/2)");
        re->add_option("--emit", emit_, "graph output format")->check(CLI::IsMember({"graph6", "edgelist", "json"}));
        re->add_flag("--labels", labels_, "also print the edge labels as JSON");
        re->add_flag("--verify", verify_, "compare NAC existence with brute-force satisfiability");
        re->add_flag("--pad-clauses", pad_, "repeat the last literal of short clauses");
        search_.add(re);
        re->callback([this] { action_ = [this] { return cmd_reduce(); }; });

        auto* be = app.add_subcommand("bench", "time strategies over graph files or generated families");
        be->add_option("inputs", bench_inputs_, "graph files");
        be->add_option("--format", bench_format_, "input format")->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
        be->add_option("--family", family_, "generated family: cycles, prism-chains, random-gnp, grid-ladders");
        be->add_option("--param", params_, "family parameter key=value (repeatable)")->allow_extra_args(false);
        be->add_option("--fixture-seed", fixture_seed_, "seed for generated families");
        be->add_option("--strategy", strategies_, "strategies (repeatable or comma separated)")->allow_extra_args(false);
        be->add_option("--merge", merges_, "merge strategies (repeatable or comma separated)")->allow_extra_args(false);
        be->add_option("--bag-size", bag_sizes_, "bag sizes (repeatable)")->allow_extra_args(false);
        be->add_option("--repeats", repeats_, "runs per graph and config");
        be->add_option("--timeout-ms", bench_timeout_ms_, "per-run limit; slower runs count as the limit");
        be->add_flag("--first", first_, "stop at the first coloring");
        be->add_option("--csv", csv_, "write the CSV report here (- for standard output)");
        be->add_option("--jsonl", jsonl_, "write JSON lines here (- for standard output, empty to disable)");
        be->add_flag("--strict", strict_, "exit 1 when any run timed out");
        be->add_option("--jobs", jobs_, "parallel workers across graphs");
        be->add_option("--group-by", group_by_, "append per-group means")->check(CLI::IsMember({"m", "n"}));
        be->add_option("--cycles-depth", search_.cycles_depth, "longest cycle used by the pre-check");
        be->add_option("--cycles-per-class", search_.cycles_per_class, "cycles kept per class");
        be->add_option("--seed", search_.seed, "decomposition seed");
        be->add_flag("--no-blocks", search_.no_blocks, "do not split into blocks");
        be->add_flag("--no-cycles", search_.no_cycles, "disable the cycle pre-check");
        be->callback([this] { action_ = [this] { return cmd_bench(); }; });
    }

    SearchConfig config() const {
        auto c = search_.config();
        c.validate();
        return c;
    }

    int cmd_exists() {
        const auto lg = src_.load(in_);
        const auto start = std::chrono::steady_clock::now();
        auto stream = enumerate(lg.graph, config());
        auto c = stream.next();
        if (c)
            out_ << coloring_json(lg, *c).dump() << '\n';
        if (stats_ || timing_)
            emit_stats(out_, stream.stats(), timing_, start);
        return c ? 0 : 1;
    }

    int cmd_enumerate() {
        const auto lg = src_.load(in_);
        const auto start = std::chrono::steady_clock::now();
        auto stream = enumerate(lg.graph, config());
        for (long long i = 0; limit_ < 0 || i < limit_; ++i) {
            auto c = stream.next();
            if (!c)
                break;
            out_ << coloring_json(lg, *c).dump() << '\n';
        }
        if (stats_ || timing_)
            emit_stats(out_, stream.stats(), timing_, start);
        return 0;
    }

    int cmd_count() {
        const auto lg = src_.load(in_);
        const auto start = std::chrono::steady_clock::now();
        auto stream = enumerate(lg.graph, config());
        std::uint64_t n = 0;
        while (stream.next())
            ++n;
        out_ << n << '\n';
        if (stats_ || timing_)
            emit_stats(out_, stream.stats(), timing_, start);
        return 0;
    }

    int cmd_classes() {
        const auto lg = src_.load(in_);
        const auto p = monochromatic_classes(lg.graph);
        json all = json::array();
        for (const auto& cls : p.classes) {
            json c = json::array();
            for (int e : cls)
                c.push_back(edge_json(lg, e));
            all.push_back(c);
        }
        out_ << all.dump() << '\n';
        return 0;
    }

    int cmd_oracle() {
        if (!cnf_.empty()) {
            if (!src_.path.empty() || !src_.g6.empty())
                throw InputError("give either a graph or --cnf, not both");
            const auto f = parse_dimacs(read_all(cnf_, in_), pad_);
            const auto a = solve_brute_force(f);
            json j{{"sat", a.has_value()}};
            if (a) {
                json vals = json::array();
                for (bool b : *a)
                    vals.push_back(b);
                j["assignment"] = vals;
            }
            out_ << j.dump() << '\n';
            return 0;
        }
        const auto lg = src_.load(in_);
        const auto all = enumerate_brute_force(lg.graph, edge_limit_);
        if (count_only_) {
            out_ << all.size() << '\n';
            return 0;
        }
        for (const auto& c : all)
            out_ << coloring_json(lg, c).dump() << '\n';
        return 0;
    }

    int cmd_reduce() {
        const auto f = parse_dimacs(read_all(cnf_, in_), pad_);
        auto r = build_reduction(f);
        if (!epsilon_.empty()) {
            const auto [num, den] = parse_rational(epsilon_);
            r = extend_for_density(r, num, den);
        }
        const Graph& g = r.graph;
        if (emit_ == "graph6") {
            out_ << to_graph6(g) << '\n';
        } else if (emit_ == "edgelist") {
            out_ << to_edge_list(g);
        } else {
            json edges = json::array();
            for (const auto& e : g.edges())
                edges.push_back(json::array({e.u, e.v}));
            out_ << json{{"n", g.vertex_count()}, {"edges", edges}}.dump() << '\n';
        }
        if (labels_) {
            json names = json::array();
            for (int l : r.edge_label)
                names.push_back(r.labels[static_cast<std::size_t>(l)].name());
            json anchors = json::object();
            for (std::size_t l = 0; l < r.labels.size(); ++l)
                anchors[r.labels[l].name()] = r.train_anchor[l];
            json gadgets = json::object();
            for (const auto& gr : r.gadgets)
                gadgets[gr.name] = gr.cycle.indices();
            out_ << json{{"edge_labels", names},
                         {"train_anchor", anchors},
                         {"gadgets", gadgets},
                         {"density_units", r.density_units}}
                        .dump()
                 << '\n';
        }
        if (verify_) {
            auto c = find_first(g, config());
            const bool sat = sat_brute_force(f);
            json j{{"sat", sat}, {"nac", c.has_value()}, {"agree", sat == c.has_value()}};
            if (c) {
                json vals = json::array();
                for (bool b : decode_assignment(r, *c))
                    vals.push_back(b);
                j["decoded"] = vals;
            }
            out_ << j.dump() << '\n';
            return sat == c.has_value() ? 0 : 1;
        }
        return 0;
    }

    int cmd_bench() {
        std::vector<BenchInput> inputs;
        for (const auto& path : bench_inputs_) {
            auto gs = load_graphs(path, bench_format_, in_);
            for (std::size_t i = 0; i < gs.size(); ++i)
                inputs.push_back({gs.size() == 1 ? base_name(path) : base_name(path) + ":" + std::to_string(i),
                                  std::move(gs[i].graph)});
        }
        if (!family_.empty()) {
            std::map<std::string, double> params;
            for (const auto& p : params_) {
                const auto eq = p.find('=');
                if (eq == std::string::npos)
                    throw InputError("parameter '" + p + "' is not key=value");
                try {
                    params[p.substr(0, eq)] = std::stod(p.substr(eq + 1));
                } catch (const std::logic_error&) {
                    throw InputError("parameter '" + p + "' has no numeric value");
                }
            }
            const auto gs = fixtures::generate(family_, params, fixture_seed_);
            for (std::size_t i = 0; i < gs.size(); ++i)
                inputs.push_back({family_ + ":" + std::to_string(i), gs[i]});
        }
        if (inputs.empty())
            throw InputError("no bench inputs");

        auto strategies = split_list(strategies_);
        auto merges = split_list(merges_);
        if (strategies.empty())
            strategies = {"none", "neighbors-degree"};
        if (merges.empty())
            merges = {"linear"};
        if (bag_sizes_.empty())
            bag_sizes_ = {search_.bag_size};
        std::vector<SearchConfig> configs;
        for (const auto& s : strategies)
            for (const auto& mg : merges)
                for (int k : bag_sizes_) {
                    SearchArgs a = search_;
                    a.strategy = s;
                    a.merge = mg;
                    a.bag_size = k;
                    a.timeout_ms = 0;
                    configs.push_back(a.config());
                }

        BenchOptions opts;
        opts.repeats = repeats_;
        opts.first_only = first_;
        opts.timeout = std::chrono::milliseconds(bench_timeout_ms_);
        opts.jobs = jobs_;
        if (bench_timeout_ms_ <= 0)
            throw InputError("timeout must be positive");
        const auto records = run_bench(inputs, configs, opts);

        auto with_stream = [&](const std::string& path, auto&& write) {
            if (path == "-") {
                write(out_);
                return;
            }
            std::ofstream f(path);
            if (!f)
                throw InputError("cannot write " + path);
            write(f);
        };
        if (!csv_.empty())
            with_stream(csv_, [&](std::ostream& o) {
                o << bench_csv_header() << '\n';
                for (const auto& r : records)
                    o << to_csv_row(r) << '\n';
            });
        if (!jsonl_.empty())
            with_stream(jsonl_, [&](std::ostream& o) {
                for (const auto& r : records)
                    o << to_json_line(r) << '\n';
                if (!group_by_.empty())
                    write_groups(o, records);
            });

        const bool any_timeout = std::any_of(records.begin(), records.end(), [](const auto& r) { return r.timed_out; });
        return strict_ && any_timeout ? 1 : 0;
    }

    void write_groups(std::ostream& o, const std::vector<BenchRecord>& records) const {
        struct Acc {
            int count = 0;
            double ms = 0;
            double full = 0;
            int timed_out = 0;
        };
        std::map<std::tuple<int, std::string, std::string, int>, Acc> groups;
        for (const auto& r : records) {
            auto& a = groups[{group_by_ == "m" ? r.m : r.n, r.strategy, r.merge, r.bag_size}];
            ++a.count;
            a.ms += r.mean_ms;
            a.full += static_cast<double>(r.stats.full_checks);
            a.timed_out += r.timed_out ? 1 : 0;
        }
        for (const auto& [key, a] : groups) {
            const auto& [value, strategy, merge, bag] = key;
            o << json{{"group_by", group_by_},
                      {"value", value},
                      {"strategy", strategy},
                      {"merge", merge},
                      {"bag_size", bag},
                      {"records", a.count},
                      {"mean_ms", a.ms / a.count},
                      {"mean_full_checks", a.full / a.count},
                      {"timed_out", a.timed_out}}
                     .dump()
              << '\n';
        }
    }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Cli cli(in, out, err);
    return cli.run(args);
}

}  // namespace nac
