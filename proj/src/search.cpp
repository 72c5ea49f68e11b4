#include "nac/search.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>

namespace nac {

std::string to_string(Strategy s) {
    switch (s) {
    case Strategy::None:
        return "none";
    case Strategy::Neighbors:
        return "neighbors";
    case Strategy::NeighborsDegree:
        return "neighbors-degree";
    }
    return "?";
}

std::string to_string(MergeStrategy s) { return s == MergeStrategy::Linear ? "linear" : "shared-vertices"; }

Strategy parse_strategy(const std::string& name) {
    if (name == "none")
        return Strategy::None;
    if (name == "neighbors")
        return Strategy::Neighbors;
    if (name == "neighbors-degree")
        return Strategy::NeighborsDegree;
    throw std::invalid_argument("unknown strategy '" + name + "'");
}

MergeStrategy parse_merge_strategy(const std::string& name) {
    if (name == "linear")
        return MergeStrategy::Linear;
    if (name == "shared-vertices")
        return MergeStrategy::SharedVertices;
    throw std::invalid_argument("unknown merge strategy '" + name + "'");
}

void SearchConfig::validate() const {
    if (bag_size < 1)
        throw ContractError("bag size must be positive");
    if (cycles_depth < 2 || cycles_per_class < 1)
        throw ContractError("cycle depth must be at least 2 and cycles per class positive");
}

NacColoring NacColoring::canonical() const {
    const std::size_t first = (red | blue).first();
    if (first < red.size() && !red.test(first))
        return {blue, red};
    return *this;
}

namespace {

using Clock = std::chrono::steady_clock;

class Budget {
public:
    explicit Budget(std::optional<std::chrono::milliseconds> timeout) {
        if (timeout)
            deadline_ = Clock::now() + *timeout;
    }
    void tick() {
        if (deadline_ && (++ticks_ & 255U) == 0 && Clock::now() >= *deadline_)
            throw SearchTimeout();
    }

private:
    std::optional<Clock::time_point> deadline_;
    std::uint64_t ticks_ = 0;
};

struct Context {
    SearchConfig cfg;
    CheckStats stats;
    Budget budget;

    explicit Context(const SearchConfig& c) : cfg(c), budget(c.timeout) {}
};

bool passes_cycles(const std::vector<CycleRecord>& cycles, const Bitset& red, CheckStats& stats) {
    for (const auto& c : cycles) {
        if (!cycle_mask_ok(c, red)) {
            ++stats.cycle_rejections;
            return false;
        }
    }
    return true;
}

/// Lazy producer of class masks (a set bit is a red class).
class MaskSource {
public:
    virtual ~MaskSource() = default;
    virtual std::optional<Bitset> next() = 0;
};

class EmptySource final : public MaskSource {
public:
    std::optional<Bitset> next() override { return std::nullopt; }
};

// Counts through all colorings of `classes` with the first class red.
class NaiveSource final : public MaskSource {
public:
    NaiveSource(const ClassChecker& checker, Context& ctx, std::vector<int> classes, std::size_t class_count,
                std::vector<CycleRecord> cycles, bool swap_inclusive)
        : checker_(checker), ctx_(ctx), classes_(std::move(classes)), cycles_(std::move(cycles)),
          swap_(swap_inclusive), red_(class_count), subset_(class_count) {
        const std::size_t free = classes_.empty() ? 0 : classes_.size() - 1;
        if (free > 62)
            throw ContractError("too many classes for a single naive search");
        limit_ = free == 0 ? 0 : (std::uint64_t{1} << free);
        for (int c : classes_)
            subset_.set(static_cast<std::size_t>(c));
    }

    std::optional<Bitset> next() override {
        if (pending_) {
            auto r = std::move(*pending_);
            pending_.reset();
            return r;
        }
        while (counter_ < limit_) {
            const std::uint64_t bits = counter_++;
            ctx_.budget.tick();
            ++ctx_.stats.mask_candidates;
            if (bits == limit_ - 1)
                continue;  // everything red
            red_.clear();
            red_.set(static_cast<std::size_t>(classes_[0]));
            for (std::size_t i = 1; i < classes_.size(); ++i)
                if ((bits >> (i - 1)) & 1U)
                    red_.set(static_cast<std::size_t>(classes_[i]));
            if (!passes_cycles(cycles_, red_, ctx_.stats))
                continue;
            ++ctx_.stats.full_checks;
            if (!checker_.check(red_, classes_))
                continue;
            if (swap_) {
                Bitset other = subset_;
                other.subtract(red_);
                pending_ = std::move(other);
            }
            return red_;
        }
        return std::nullopt;
    }

private:
    const ClassChecker& checker_;
    Context& ctx_;
    std::vector<int> classes_;
    std::vector<CycleRecord> cycles_;
    bool swap_;
    Bitset red_;
    Bitset subset_;
    std::uint64_t counter_ = 0;
    std::uint64_t limit_ = 0;
    std::optional<Bitset> pending_;
};

// Memoizes a source so it can be replayed; prefix items come first.
class CachedStream {
public:
    CachedStream(std::unique_ptr<MaskSource> source, std::vector<Bitset> prefix)
        : source_(std::move(source)), items_(prefix.begin(), prefix.end()) {}

    const Bitset* get(std::size_t i) {
        while (items_.size() <= i && source_) {
            auto x = source_->next();
            if (!x)
                source_.reset();
            else
                items_.push_back(std::move(*x));
        }
        return i < items_.size() ? &items_[i] : nullptr;
    }

private:
    std::unique_ptr<MaskSource> source_;
    std::deque<Bitset> items_;
};

// NAC-product of two class-disjoint children, filtered to the union.
class ProductSource final : public MaskSource {
public:
    ProductSource(const ClassChecker& checker, Context& ctx, std::unique_ptr<MaskSource> left, std::vector<Bitset> left_prefix,
                  std::unique_ptr<CachedStream> right, std::vector<int> classes, Bitset mask, std::vector<CycleRecord> cycles)
        : checker_(checker), ctx_(ctx), left_(std::move(left)), left_prefix_(std::move(left_prefix)), right_(std::move(right)),
          classes_(std::move(classes)), mask_(std::move(mask)), cycles_(std::move(cycles)) {}

    std::optional<Bitset> next() override {
        for (;;) {
            if (!have_left_) {
                if (prefix_pos_ < left_prefix_.size()) {
                    current_ = left_prefix_[prefix_pos_++];
                } else {
                    auto x = left_ ? left_->next() : std::nullopt;
                    if (!x) {
                        left_.reset();
                        return std::nullopt;
                    }
                    current_ = std::move(*x);
                }
                have_left_ = true;
                right_pos_ = 0;
            }
            const Bitset* r = right_->get(right_pos_++);
            if (!r) {
                have_left_ = false;
                continue;
            }
            ctx_.budget.tick();
            ++ctx_.stats.mask_candidates;
            Bitset red = current_ | *r;
            if (red.none() || red == mask_)
                continue;
            if (!passes_cycles(cycles_, red, ctx_.stats))
                continue;
            ++ctx_.stats.full_checks;
            if (checker_.check(red, classes_))
                return red;
        }
    }

private:
    const ClassChecker& checker_;
    Context& ctx_;
    std::unique_ptr<MaskSource> left_;
    std::vector<Bitset> left_prefix_;
    std::unique_ptr<CachedStream> right_;
    std::vector<int> classes_;
    Bitset mask_;
    std::vector<CycleRecord> cycles_;
    bool have_left_ = false;
    std::size_t prefix_pos_ = 0;
    std::size_t right_pos_ = 0;
    Bitset current_;
};

std::vector<CycleRecord> cycles_for(const Graph& g, const MonochromaticPartition& p, const Bitset& allowed, const SearchConfig& cfg) {
    if (!cfg.use_cycles)
        return {};
    return collect_small_cycles(g, p, allowed, cfg.cycles_depth, cfg.cycles_per_class);
}

struct TreeNode {
    std::unique_ptr<MaskSource> source;
    std::vector<int> classes;
    Bitset mask;
    Bitset vertices;
    std::size_t edges = 0;
    bool canonical = false;  // contains class 0 with class 0 pinned red

    std::vector<Bitset> mono_options() const {
        std::vector<Bitset> out{mask};
        if (!canonical)
            out.emplace_back(mask.size());
        return out;
    }
};

// Search tree for one graph whose classes are given by `p`. With `canonical`
// the yielded masks all have class 0 red; otherwise they are closed under swapping.
std::unique_ptr<MaskSource> build_source(const Graph& g, const MonochromaticPartition& p, const ClassChecker& checker, Context& ctx,
                                         bool canonical) {
    const auto m = static_cast<std::size_t>(p.size());
    if (m < 2)
        return std::make_unique<EmptySource>();
    const SearchConfig& cfg = ctx.cfg;
    if (m <= static_cast<std::size_t>(cfg.bag_size)) {
        std::vector<int> all(m);
        std::iota(all.begin(), all.end(), 0);
        return std::make_unique<NaiveSource>(checker, ctx, std::move(all), m, cycles_for(g, p, Bitset::full(m), cfg), !canonical);
    }

    std::vector<TreeNode> nodes;
    for (auto& bag : decompose(g, p, cfg)) {
        TreeNode node;
        node.classes = bag.class_indices;
        node.mask = Bitset(m);
        for (int c : node.classes)
            node.mask.set(static_cast<std::size_t>(c));
        node.vertices = bag.vertices;
        node.edges = bag.edges.count();
        node.canonical = canonical && node.mask.test(0);
        node.source = std::make_unique<NaiveSource>(checker, ctx, node.classes, m, cycles_for(g, p, node.mask, cfg), !node.canonical);
        nodes.push_back(std::move(node));
    }
    std::vector<Bitset> vsets;
    std::vector<std::size_t> ecounts;
    for (const auto& n : nodes) {
        vsets.push_back(n.vertices);
        ecounts.push_back(n.edges);
    }
    for (auto [a, b] : plan_merges(vsets, ecounts, cfg.merge)) {
        TreeNode& left = nodes[static_cast<std::size_t>(a)];
        TreeNode& right = nodes[static_cast<std::size_t>(b)];
        TreeNode merged;
        merged.mask = left.mask | right.mask;
        merged.classes = merged.mask.indices();
        merged.vertices = left.vertices | right.vertices;
        merged.edges = left.edges + right.edges;
        merged.canonical = left.canonical || right.canonical;
        auto cached = std::make_unique<CachedStream>(std::move(right.source), right.mono_options());
        merged.source = std::make_unique<ProductSource>(checker, ctx, std::move(left.source), left.mono_options(), std::move(cached),
                                                        merged.classes, merged.mask, cycles_for(g, p, merged.mask, cfg));
        nodes.push_back(std::move(merged));
    }
    return std::move(nodes.back().source);
}

// One block (or component) searched on its own.
struct Unit {
    Subgraph sub;
    MonochromaticPartition part;
    ClassChecker checker;
    std::vector<Bitset> parent_edges_of_class;

    Unit(const Graph& g, const EdgeSet& edges) : sub(edge_subgraph(g, edges)), part(monochromatic_classes(sub.graph)) {
        checker = ClassChecker(sub.graph, part);
        for (const auto& cls : part.classes) {
            Bitset b(static_cast<std::size_t>(g.edge_count()));
            for (int e : cls)
                b.set(static_cast<std::size_t>(sub.parent_edge[static_cast<std::size_t>(e)]));
            parent_edges_of_class.push_back(std::move(b));
        }
    }

    EdgeSet to_parent(const Bitset& mask) const {
        EdgeSet out(parent_edges_of_class.empty() ? 0 : parent_edges_of_class[0].size());
        mask.for_each([&](std::size_t c) { out |= parent_edges_of_class[c]; });
        return out;
    }
};

}  // namespace

struct ColoringStream::Impl {
    explicit Impl(const SearchConfig& cfg) : ctx(cfg) {}
    virtual ~Impl() = default;
    virtual std::optional<NacColoring> pull() = 0;

    Context ctx;
};

ColoringStream::ColoringStream(std::unique_ptr<Impl> impl) : impl_(std::move(impl)) {}
ColoringStream::ColoringStream(ColoringStream&&) noexcept = default;
ColoringStream& ColoringStream::operator=(ColoringStream&&) noexcept = default;
ColoringStream::~ColoringStream() = default;

std::optional<NacColoring> ColoringStream::next() {
    auto c = impl_->pull();
    if (c)
        ++impl_->ctx.stats.found;
    return c;
}

const CheckStats& ColoringStream::stats() const { return impl_->ctx.stats; }

std::vector<NacColoring> ColoringStream::collect(std::optional<std::size_t> limit) {
    std::vector<NacColoring> out;
    while (!limit || out.size() < *limit) {
        auto c = next();
        if (!c)
            break;
        out.push_back(std::move(*c));
    }
    return out;
}

namespace {

class EmptyImpl final : public ColoringStream::Impl {
public:
    using Impl::Impl;
    std::optional<NacColoring> pull() override { return std::nullopt; }
};

class NaiveImpl final : public ColoringStream::Impl {
public:
    NaiveImpl(const Graph& g, const MonochromaticPartition& p, std::vector<CycleRecord> cycles)
        : Impl(SearchConfig{}), g_(g), p_(p), checker_(g_, p_) {
        std::vector<int> all(static_cast<std::size_t>(p_.size()));
        std::iota(all.begin(), all.end(), 0);
        const auto m = static_cast<std::size_t>(p_.size());
        for (const auto& c : cycles)
            if (c.class_mask.size() != m)
                throw ContractError("cycle record does not match the partition");
        if (m >= 2)
            source_ = std::make_unique<NaiveSource>(checker_, ctx, std::move(all), m, std::move(cycles), false);
        else
            source_ = std::make_unique<EmptySource>();
    }

    std::optional<NacColoring> pull() override {
        auto mask = source_->next();
        if (!mask)
            return std::nullopt;
        EdgeSet red = p_.edges_of(g_, *mask);
        EdgeSet blue = g_.all_edges();
        blue.subtract(red);
        return NacColoring{std::move(red), std::move(blue)};
    }

private:
    Graph g_;
    MonochromaticPartition p_;
    ClassChecker checker_;
    std::unique_ptr<MaskSource> source_;
};

class EngineImpl final : public ColoringStream::Impl {
public:
    EngineImpl(const Graph& g, const SearchConfig& cfg) : Impl(cfg), g_(g) {
        std::vector<EdgeSet> parts;
        if (cfg.use_blocks) {
            parts = blocks(g_);
        } else {
            for (const auto& comp : connected_components(g_)) {
                EdgeSet es = g_.empty_edge_set();
                for (int v : comp)
                    for (int e : g_.incident_edges(v))
                        es.set(static_cast<std::size_t>(e));
                if (es.any())
                    parts.push_back(std::move(es));
            }
            std::sort(parts.begin(), parts.end(), [](const EdgeSet& a, const EdgeSet& b) { return a.first() < b.first(); });
        }
        for (const auto& es : parts)
            units_.push_back(std::make_unique<Unit>(g_, es));
        if (units_.empty())
            return;
        if (units_.size() == 1) {
            root_ = build_source(units_[0]->sub.graph, units_[0]->part, units_[0]->checker, ctx, true);
            return;
        }
        for (std::size_t i = 0; i < units_.size(); ++i) {
            Unit& u = *units_[i];
            const auto m = static_cast<std::size_t>(u.part.size());
            std::vector<Bitset> monos{Bitset::full(m)};
            if (i > 0)
                monos.emplace_back(m);
            streams_.push_back(std::make_unique<CachedStream>(build_source(u.sub.graph, u.part, u.checker, ctx, i == 0), std::move(monos)));
            converted_.emplace_back();
        }
    }

    std::optional<NacColoring> pull() override {
        if (units_.empty())
            return std::nullopt;
        if (root_)
            return pull_single();
        return pull_product();
    }

private:
    NacColoring make(EdgeSet red) const {
        EdgeSet blue = g_.all_edges();
        blue.subtract(red);
        return {std::move(red), std::move(blue)};
    }

    std::optional<NacColoring> pull_single() {
        auto mask = root_->next();
        if (!mask)
            return std::nullopt;
        return make(units_[0]->to_parent(*mask));
    }

    const EdgeSet* option(std::size_t unit, std::size_t j) {
        auto& conv = converted_[unit];
        while (conv.size() <= j) {
            const Bitset* mask = streams_[unit]->get(conv.size());
            if (!mask)
                return nullptr;
            conv.push_back(units_[unit]->to_parent(*mask));
        }
        return &conv[j];
    }

    // Odometer over the per-unit option lists; the last unit moves fastest.
    bool advance() {
        for (std::size_t i = idx_.size(); i-- > 0;) {
            if (option(i, idx_[i] + 1)) {
                ++idx_[i];
                return true;
            }
            idx_[i] = 0;
        }
        return false;
    }

    std::optional<NacColoring> pull_product() {
        if (done_)
            return std::nullopt;
        if (idx_.empty()) {
            idx_.assign(units_.size(), 0);
        } else if (!advance()) {
            done_ = true;
            return std::nullopt;
        }
        const EdgeSet all = g_.all_edges();
        for (;;) {
            EdgeSet red = g_.empty_edge_set();
            for (std::size_t i = 0; i < idx_.size(); ++i)
                red |= *option(i, idx_[i]);
            ctx.budget.tick();
            ++ctx.stats.mask_candidates;
            if (red != all) {
                EdgeSet blue = all;
                blue.subtract(red);
                ++ctx.stats.full_checks;
                if (!is_nac_coloring(g_, red, blue))
                    throw std::logic_error("combined block colorings failed the full check");
                return NacColoring{std::move(red), std::move(blue)};
            }
            if (!advance()) {
                done_ = true;
                return std::nullopt;
            }
        }
    }

    Graph g_;
    std::vector<std::unique_ptr<Unit>> units_;
    std::unique_ptr<MaskSource> root_;
    std::vector<std::unique_ptr<CachedStream>> streams_;
    std::vector<std::vector<EdgeSet>> converted_;
    std::vector<std::size_t> idx_;
    bool done_ = false;
};

}  // namespace

std::vector<NacColoring> enumerate_brute_force(const Graph& g, int edge_limit) {
    const int m = g.edge_count();
    if (m > edge_limit || m > 63)
        throw OracleLimitError("brute force limited to " + std::to_string(std::min(edge_limit, 63)) + " edges, graph has " +
                               std::to_string(m));
    std::vector<NacColoring> out;
    if (m < 2)
        return out;
    const int n = g.vertex_count();
    std::vector<int> rp(static_cast<std::size_t>(n)), bp(static_cast<std::size_t>(n));
    auto root = [](std::vector<int>& p, int x) {
        while (p[x] != x)
            x = p[x] = p[p[x]];
        return x;
    };
    const std::uint64_t limit = std::uint64_t{1} << (m - 1);
    for (std::uint64_t bits = 0; bits + 1 < limit; ++bits) {
        const std::uint64_t red = 1U | (bits << 1);
        std::iota(rp.begin(), rp.end(), 0);
        std::iota(bp.begin(), bp.end(), 0);
        for (int e = 0; e < m; ++e) {
            auto& p = (red >> e) & 1U ? rp : bp;
            p[root(p, g.edge(e).u)] = root(p, g.edge(e).v);
        }
        bool ok = true;
        for (int e = 0; e < m && ok; ++e) {
            auto& other = (red >> e) & 1U ? bp : rp;
            ok = root(other, g.edge(e).u) != root(other, g.edge(e).v);
        }
        if (!ok)
            continue;
        NacColoring c{g.empty_edge_set(), g.empty_edge_set()};
        for (int e = 0; e < m; ++e)
            ((red >> e) & 1U ? c.red : c.blue).set(static_cast<std::size_t>(e));
        out.push_back(std::move(c));
    }
    return out;
}

ColoringStream enumerate_naive(const Graph& g, const MonochromaticPartition& p, std::vector<CycleRecord> cycles) {
    if (static_cast<int>(p.class_of_edge.size()) != g.edge_count())
        throw ContractError("partition does not match the graph");
    return ColoringStream(std::make_unique<NaiveImpl>(g, p, std::move(cycles)));
}

namespace {

std::vector<int> shuffled_order(std::size_t m, std::uint64_t seed) {
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(seed);
    for (std::size_t i = m; i > 1; --i) {
        const std::size_t j = rng() % i;
        std::swap(order[i - 1], order[j]);
    }
    return order;
}

}  // namespace

std::vector<Bag> decompose(const Graph& g, const MonochromaticPartition& p, const SearchConfig& cfg) {
    cfg.validate();
    const auto m = static_cast<std::size_t>(p.size());
    const auto k = static_cast<std::size_t>(cfg.bag_size);
    std::vector<std::vector<int>> groups;
    if (cfg.strategy == Strategy::None) {
        for (std::size_t i = 0; i < m; i += k) {
            groups.emplace_back();
            for (std::size_t c = i; c < std::min(m, i + k); ++c)
                groups.back().push_back(static_cast<int>(c));
        }
    } else {
        const std::size_t bag_count = (m + k - 1) / k;
        groups.resize(bag_count);
        const auto n = static_cast<std::size_t>(g.vertex_count());
        std::vector<Bitset> used(bag_count, Bitset(n));
        std::vector<char> remaining(m, 1);
        const auto order = shuffled_order(m, cfg.seed);
        std::size_t order_pos = 0;
        const bool by_degree = cfg.strategy == Strategy::NeighborsDegree;

        auto take = [&](std::size_t bag, int c) {
            remaining[static_cast<std::size_t>(c)] = 0;
            groups[bag].push_back(c);
            used[bag] |= p.class_vertices[static_cast<std::size_t>(c)];
        };

        for (;;) {
            while (order_pos < m && !remaining[static_cast<std::size_t>(order[order_pos])])
                ++order_pos;
            if (order_pos == m)
                break;
            std::size_t bag = 0;
            for (std::size_t b = 1; b < bag_count; ++b)
                if (groups[b].size() < groups[bag].size())
                    bag = b;
            take(bag, order[order_pos]);

            // Candidates are the far ends of edges leaving `used` whose class is
            // still unassigned; such a vertex may itself be used already.
            while (groups[bag].size() < k) {
                int best = -1, best_score = -1;
                used[bag].for_each([&](std::size_t v) {
                    const auto& nb = g.neighbors(static_cast<int>(v));
                    const auto& inc = g.incident_edges(static_cast<int>(v));
                    for (std::size_t i = 0; i < nb.size(); ++i) {
                        if (!remaining[static_cast<std::size_t>(p.class_of_edge[static_cast<std::size_t>(inc[i])])])
                            continue;
                        const int u = nb[i];
                        int score = 0;
                        for (int w : g.neighbors(u))
                            score += used[bag].test(static_cast<std::size_t>(w)) ? 1 : 0;
                        const bool better = best < 0 || score > best_score ||
                                            (score == best_score && by_degree && g.degree(u) < g.degree(best)) ||
                                            (score == best_score && (!by_degree || g.degree(u) == g.degree(best)) && u < best);
                        if (better) {
                            best = u;
                            best_score = score;
                        }
                    }
                });
                if (best < 0)
                    break;
                const auto& inc = g.incident_edges(best);
                for (std::size_t i = 0; i < inc.size() && groups[bag].size() < k; ++i) {
                    const int c = p.class_of_edge[static_cast<std::size_t>(inc[i])];
                    if (remaining[static_cast<std::size_t>(c)])
                        take(bag, c);
                }
            }
        }
    }

    std::vector<Bag> bags;
    for (auto& grp : groups) {
        if (grp.empty())
            continue;
        std::sort(grp.begin(), grp.end());
        Bag bag{grp, g.empty_edge_set(), Bitset(static_cast<std::size_t>(g.vertex_count()))};
        for (int c : grp) {
            for (int e : p.classes[static_cast<std::size_t>(c)])
                bag.edges.set(static_cast<std::size_t>(e));
            bag.vertices |= p.class_vertices[static_cast<std::size_t>(c)];
        }
        bags.push_back(std::move(bag));
    }
    return bags;
}

std::vector<std::pair<int, int>> plan_merges(const std::vector<Bitset>& vertex_sets, const std::vector<std::size_t>& edge_counts,
                                             MergeStrategy strategy) {
    if (vertex_sets.size() != edge_counts.size())
        throw ContractError("vertex sets and edge counts differ in length");
    const int n = static_cast<int>(vertex_sets.size());
    std::vector<std::pair<int, int>> plan;
    if (n < 2)
        return plan;
    if (strategy == MergeStrategy::Linear) {
        int cur = 0;
        for (int i = 1; i < n; ++i) {
            plan.emplace_back(cur, i);
            cur = n + i - 1;
        }
        return plan;
    }
    struct Active {
        int id;
        Bitset vertices;
        std::size_t edges;
    };
    std::vector<Active> active;
    for (int i = 0; i < n; ++i)
        active.push_back({i, vertex_sets[static_cast<std::size_t>(i)], edge_counts[static_cast<std::size_t>(i)]});
    int next_id = n;
    while (active.size() > 1) {
        std::size_t bi = 0, bj = 1;
        std::size_t best_shared = 0, best_edges = 0;
        bool have = false;
        for (std::size_t i = 0; i < active.size(); ++i) {
            for (std::size_t j = i + 1; j < active.size(); ++j) {
                const std::size_t shared = Bitset::intersection_count(active[i].vertices, active[j].vertices);
                const std::size_t edges = active[i].edges + active[j].edges;
                if (!have || shared > best_shared || (shared == best_shared && edges < best_edges)) {
                    have = true;
                    bi = i;
                    bj = j;
                    best_shared = shared;
                    best_edges = edges;
                }
            }
        }
        plan.emplace_back(active[bi].id, active[bj].id);
        active[bi] = {next_id++, active[bi].vertices | active[bj].vertices, best_edges};
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(bj));
    }
    return plan;
}

namespace {

void check_partial(const Graph& host, const PartialResult& r) {
    const auto m = static_cast<std::size_t>(host.edge_count());
    if (r.edges.size() != m)
        throw ContractError("edge set size does not match the host graph");
    for (const auto& c : r.colorings)
        if (c.size() != m || !c.is_subset_of(r.edges))
            throw ContractError("coloring is not a subset of its subgraph");
}

}  // namespace

MergeResult nac_product_merge(const Graph& host, const PartialResult& first, const PartialResult& second, const SearchConfig& cfg) {
    check_partial(host, first);
    check_partial(host, second);
    if (first.edges.intersects(second.edges))
        throw ContractError("merged subgraphs must not share edges");
    MergeResult out;
    out.merged.edges = first.edges | second.edges;
    std::vector<CycleRecord> cycles;
    if (cfg.use_cycles) {
        // Each host edge is its own class; the red edge set doubles as the class mask.
        const auto singles = MonochromaticPartition::singletons(host);
        cycles = collect_small_cycles(host, singles, out.merged.edges, cfg.cycles_depth, cfg.cycles_per_class);
    }
    auto options = [&](const PartialResult& r) {
        std::vector<EdgeSet> opts{r.edges, host.empty_edge_set()};
        opts.insert(opts.end(), r.colorings.begin(), r.colorings.end());
        return opts;
    };
    const auto left = options(first);
    const auto right = options(second);
    for (const auto& a : left) {
        for (const auto& b : right) {
            ++out.stats.mask_candidates;
            EdgeSet red = a | b;
            if (red.none() || red == out.merged.edges)
                continue;
            if (!passes_cycles(cycles, red, out.stats))
                continue;
            ++out.stats.full_checks;
            if (is_nac_coloring_on(host, out.merged.edges, red)) {
                ++out.stats.found;
                out.merged.colorings.push_back(std::move(red));
            }
        }
    }
    return out;
}

std::vector<NacColoring> merge_all(const Graph& host, std::vector<PartialResult> parts, const SearchConfig& cfg, CheckStats* stats) {
    std::vector<NacColoring> out;
    if (parts.empty())
        return out;
    std::vector<Bitset> vsets;
    std::vector<std::size_t> ecounts;
    for (const auto& p : parts) {
        check_partial(host, p);
        vsets.push_back(vertices_of(host, p.edges));
        ecounts.push_back(p.edges.count());
    }
    for (auto [a, b] : plan_merges(vsets, ecounts, cfg.merge)) {
        auto r = nac_product_merge(host, parts[static_cast<std::size_t>(a)], parts[static_cast<std::size_t>(b)], cfg);
        if (stats)
            *stats += r.stats;
        parts.push_back(std::move(r.merged));
    }
    const PartialResult& root = parts.back();
    const std::size_t pivot = root.edges.first();
    for (const auto& red : root.colorings) {
        if (!red.test(pivot))
            continue;
        EdgeSet blue = root.edges;
        blue.subtract(red);
        out.push_back({red, std::move(blue)});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

ColoringStream enumerate(const Graph& g, const SearchConfig& cfg) {
    cfg.validate();
    if (g.edge_count() == 0)
        return ColoringStream(std::make_unique<EmptyImpl>(cfg));
    return ColoringStream(std::make_unique<EngineImpl>(g, cfg));
}

std::optional<NacColoring> find_first(const Graph& g, const SearchConfig& cfg, CheckStats* stats) {
    auto stream = enumerate(g, cfg);
    auto c = stream.next();
    if (stats)
        *stats = stream.stats();
    return c;
}

bool exists(const Graph& g, const SearchConfig& cfg, CheckStats* stats) { return find_first(g, cfg, stats).has_value(); }

}  // namespace nac
