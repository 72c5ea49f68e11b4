#include <doctest.h>

#include <random>
#include <set>

#include "nac/fixtures.hpp"
#include "nac/search.hpp"
#include "oracle.hpp"

using namespace nac;

namespace {

std::vector<SearchConfig> all_configs() {
    std::vector<SearchConfig> out;
    for (auto s : {Strategy::None, Strategy::Neighbors, Strategy::NeighborsDegree})
        for (auto m : {MergeStrategy::Linear, MergeStrategy::SharedVertices}) {
            SearchConfig cfg;
            cfg.strategy = s;
            cfg.merge = m;
            out.push_back(cfg);
        }
    return out;
}

EdgeSet edges(const Graph& g, std::initializer_list<int> idx) {
    EdgeSet s = g.empty_edge_set();
    for (int i : idx)
        s.set(static_cast<std::size_t>(i));
    return s;
}

std::vector<EdgeSet> swap_inclusive(const Graph& g, const EdgeSet& sub) {
    // all NAC-colorings of G[sub] by brute force over subsets of sub
    std::vector<EdgeSet> out;
    const auto idx = sub.indices();
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << idx.size()); ++mask) {
        EdgeSet red = g.empty_edge_set();
        for (std::size_t i = 0; i < idx.size(); ++i)
            if ((mask >> i) & 1U)
                red.set(static_cast<std::size_t>(idx[i]));
        if (is_nac_coloring_on(g, sub, red))
            out.push_back(red);
    }
    return out;
}

}  // namespace

TEST_CASE("brute force examples") {
    auto prism = enumerate_brute_force(fixtures::prism());
    REQUIRE(prism.size() == 1);
    CHECK(prism[0].red == edges(fixtures::prism(), {0, 1, 2, 3, 4, 5}));
    CHECK(prism[0].blue == edges(fixtures::prism(), {6, 7, 8}));
    for (int n = 4; n <= 10; ++n)
        CHECK(enumerate_brute_force(fixtures::cycle(n)).size() == (std::size_t{1} << (n - 1)) - n - 1);
    CHECK(enumerate_brute_force(fixtures::complete(4)).empty());
    CHECK_THROWS_AS(enumerate_brute_force(fixtures::complete(8)), OracleLimitError);
    CHECK_THROWS_AS(enumerate_brute_force(fixtures::cycle(6), 5), OracleLimitError);
    CHECK(enumerate_brute_force(fixtures::complete(7)).empty());
}

TEST_CASE("brute force agrees with the cycle-definition oracle") {
    for (int n = 2; n <= 5; ++n)
        oracle::for_each_connected_graph(n, [](const Graph& g) {
            REQUIRE(oracle::masks_of(enumerate_brute_force(g)) == oracle::nac_masks(g));
        });
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = fixtures::random_gnp(7, 0.45, rng());
        if (g.edge_count() > 16)
            continue;
        REQUIRE(oracle::masks_of(enumerate_brute_force(g)) == oracle::nac_masks(g));
    }
}

TEST_CASE("naive enumeration examples") {
    auto prism = fixtures::prism();
    auto pp = monochromatic_classes(prism);
    auto s = enumerate_naive(prism, pp, collect_small_cycles(prism, pp, 4, 2));
    auto all = s.collect();
    CHECK(all.size() == 1);
    CHECK(s.stats().mask_candidates == 16);
    CHECK(s.stats().found == 1);
    CHECK(s.stats().consistent());

    auto c4 = fixtures::cycle(4);
    auto s4 = enumerate_naive(c4, monochromatic_classes(c4), {});
    CHECK(s4.collect().size() == 3);
    CHECK(s4.stats().mask_candidates == 8);
    CHECK(s4.stats().found == 3);

    auto k4 = fixtures::complete(4);
    auto sk = enumerate_naive(k4, monochromatic_classes(k4), {});
    CHECK_FALSE(sk.next().has_value());
    CHECK(sk.stats().mask_candidates == 0);
}

TEST_CASE("naive enumeration with a singleton partition equals brute force") {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 30; ++trial) {
        auto g = fixtures::random_gnp(6, 0.5, rng());
        auto p = MonochromaticPartition::singletons(g);
        auto s = enumerate_naive(g, p, collect_small_cycles(g, p, 4, 2));
        auto got = s.collect();
        std::sort(got.begin(), got.end());
        CHECK(got == enumerate_brute_force(g));
    }
}

TEST_CASE("enumerate examples") {
    for (const auto& cfg : all_configs()) {
        auto prism = enumerate(fixtures::prism(), cfg).collect();
        REQUIRE(prism.size() == 1);
        CHECK(prism[0].blue == edges(fixtures::prism(), {6, 7, 8}));
        CHECK(enumerate(fixtures::complete(4), cfg).collect().empty());
        CHECK(enumerate(Graph(3, {}), cfg).collect().empty());
    }
    CHECK(exists(fixtures::prism()));
    CHECK_FALSE(exists(fixtures::complete(4)));
    CheckStats st;
    CHECK(exists(fixtures::cycle(20), {}, &st));
    CHECK(st.full_checks < (1U << 19));
    CHECK(st.found == 1);
}

TEST_CASE("enumerate equals brute force on every connected graph up to 5 vertices") {
    auto configs = all_configs();
    SearchConfig small_bags;
    small_bags.bag_size = 2;
    configs.push_back(small_bags);
    SearchConfig no_blocks;
    no_blocks.use_blocks = false;
    no_blocks.bag_size = 3;
    configs.push_back(no_blocks);
    SearchConfig no_cycles;
    no_cycles.use_cycles = false;
    no_cycles.bag_size = 1;
    configs.push_back(no_cycles);
    for (int n = 1; n <= 5; ++n)
        oracle::for_each_connected_graph(n, [&](const Graph& g) {
            const auto expected = enumerate_brute_force(g);
            for (const auto& cfg : configs) {
                auto s = enumerate(g, cfg);
                auto got = s.collect();
                std::sort(got.begin(), got.end());
                REQUIRE(got == expected);
                REQUIRE(s.stats().consistent());
                REQUIRE(s.stats().found == expected.size());
            }
        });
}

TEST_CASE("enumerate handles disconnected graphs and isolated vertices") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 120; ++trial) {
        auto g = fixtures::random_gnp(8, 0.3, rng());
        if (g.edge_count() > 18)
            continue;
        const auto expected = enumerate_brute_force(g);
        for (const auto& base : all_configs()) {
            for (bool blocks_on : {true, false}) {
                SearchConfig cfg = base;
                cfg.use_blocks = blocks_on;
                cfg.bag_size = 2 + trial % 3;
                cfg.seed = static_cast<std::uint64_t>(trial);
                auto got = enumerate(g, cfg).collect();
                std::sort(got.begin(), got.end());
                REQUIRE(got == expected);
            }
        }
    }
    // two disjoint edges: one coloring, one edge of each color
    auto two = enumerate(Graph(5, {{0, 1}, {3, 4}})).collect();
    REQUIRE(two.size() == 1);
    CHECK(two[0].red.test(0));
    CHECK(two[0].blue.test(1));
}

TEST_CASE("yielded colorings are canonical and pairwise distinct") {
    auto g = fixtures::prism_chain(3, 5);
    auto s = enumerate(g);
    std::set<std::vector<Bitset::Word>> seen;
    for (const auto& c : s) {
        CHECK(c.red.test(0));
        CHECK(is_nac_coloring(g, c.red, c.blue));
        CHECK(seen.insert(c.red.words()).second);
        CHECK(seen.count(c.blue.words()) == 0);
    }
    CHECK(s.stats().found == seen.size());
    CHECK(s.stats().consistent());
}

TEST_CASE("limit and laziness") {
    auto g = fixtures::cycle(16);
    auto s = enumerate(g);
    auto first = s.collect(5);
    CHECK(first.size() == 5);
    CHECK(s.stats().found == 5);
    CHECK(s.stats().full_checks < 200);

    auto it = s.begin();
    CHECK(it != s.end());
}

TEST_CASE("timeout raises SearchTimeout") {
    SearchConfig cfg;
    cfg.strategy = Strategy::None;
    cfg.bag_size = 24;
    cfg.timeout = std::chrono::milliseconds(1);
    auto s = enumerate(fixtures::cycle(24), cfg);
    CHECK_THROWS_AS(s.collect(), SearchTimeout);
}

TEST_CASE("config validation and names") {
    SearchConfig bad;
    bad.bag_size = 0;
    CHECK_THROWS_AS(enumerate(fixtures::cycle(4), bad), ContractError);
    CHECK(parse_strategy("neighbors-degree") == Strategy::NeighborsDegree);
    CHECK(parse_merge_strategy("shared-vertices") == MergeStrategy::SharedVertices);
    CHECK(to_string(Strategy::None) == "none");
    CHECK_THROWS_AS(parse_strategy("bfs"), std::invalid_argument);
}

TEST_CASE("decompose with strategy none") {
    SearchConfig cfg;
    cfg.strategy = Strategy::None;
    auto g8 = fixtures::cycle(8);
    auto bags = decompose(g8, monochromatic_classes(g8), cfg);
    REQUIRE(bags.size() == 2);
    CHECK(bags[0].class_indices == std::vector<int>{0, 1, 2, 3});
    CHECK(bags[1].class_indices == std::vector<int>{4, 5, 6, 7});
    CHECK(bags[0].edges.count() == 4);
    CHECK(bags[0].vertices.count() == 5);

    auto g5 = fixtures::cycle(5);
    auto b5 = decompose(g5, monochromatic_classes(g5), cfg);
    REQUIRE(b5.size() == 2);
    CHECK(b5[0].class_indices.size() == 4);
    CHECK(b5[1].class_indices.size() == 1);
}

TEST_CASE("decompose with neighbor strategies keeps disjoint prisms apart") {
    std::vector<std::pair<int, int>> e;
    for (int off : {0, 6})
        for (auto [u, v] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}})
            e.emplace_back(u + off, v + off);
    Graph g(12, e);
    auto p = monochromatic_classes(g);
    REQUIRE(p.size() == 10);
    for (auto strategy : {Strategy::Neighbors, Strategy::NeighborsDegree})
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            SearchConfig cfg;
            cfg.strategy = strategy;
            cfg.bag_size = 5;
            cfg.seed = seed;
            auto bags = decompose(g, p, cfg);
            REQUIRE(bags.size() == 2);
            for (const auto& b : bags) {
                CHECK(b.class_indices.size() == 5);
                const bool left = p.classes[b.class_indices[0]][0] < 9;
                for (int c : b.class_indices)
                    CHECK((p.classes[c][0] < 9) == left);
            }
        }
}

TEST_CASE("decompose partitions the classes and is deterministic") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = fixtures::random_gnp(12, 0.3, rng());
        auto p = monochromatic_classes(g);
        for (auto strategy : {Strategy::None, Strategy::Neighbors, Strategy::NeighborsDegree}) {
            SearchConfig cfg;
            cfg.strategy = strategy;
            cfg.bag_size = 1 + trial % 5;
            cfg.seed = static_cast<std::uint64_t>(trial);
            auto bags = decompose(g, p, cfg);
            std::vector<int> count(static_cast<std::size_t>(p.size()), 0);
            for (const auto& b : bags) {
                CHECK(!b.class_indices.empty());
                CHECK(b.class_indices.size() <= static_cast<std::size_t>(cfg.bag_size));
                CHECK(std::is_sorted(b.class_indices.begin(), b.class_indices.end()));
                for (int c : b.class_indices)
                    ++count[static_cast<std::size_t>(c)];
            }
            CHECK(std::all_of(count.begin(), count.end(), [](int x) { return x == 1; }));
            auto again = decompose(g, p, cfg);
            REQUIRE(again.size() == bags.size());
            for (std::size_t i = 0; i < bags.size(); ++i)
                CHECK(again[i].class_indices == bags[i].class_indices);
        }
    }
}

TEST_CASE("plan_merges") {
    std::vector<Bitset> v(4, Bitset(6));
    v[0].set(0);
    v[1].set(5);
    v[2].set(0);
    v[2].set(1);
    v[3].set(5);
    v[3].set(1);
    std::vector<std::size_t> e{3, 3, 3, 3};
    auto lin = plan_merges(v, e, MergeStrategy::Linear);
    CHECK(lin == std::vector<std::pair<int, int>>{{0, 1}, {4, 2}, {5, 3}});
    auto sh = plan_merges(v, e, MergeStrategy::SharedVertices);
    // 0-2, 1-3 and 2-3 all share one vertex with equal edge totals: list order
    // picks 0-2; then 1-3 beats 4-3 on the combined edge count
    REQUIRE(sh.size() == 3);
    CHECK(sh[0] == std::pair<int, int>{0, 2});
    CHECK(sh[1] == std::pair<int, int>{1, 3});
    CHECK(sh[2] == std::pair<int, int>{4, 5});
    CHECK(plan_merges({v[0]}, {1}, MergeStrategy::Linear).empty());
}

TEST_CASE("nac_product_merge examples") {
    Graph two_edges(4, {{0, 1}, {2, 3}});
    PartialResult a{edges(two_edges, {0}), {}}, b{edges(two_edges, {1}), {}};
    auto r = nac_product_merge(two_edges, a, b);
    CHECK(r.merged.colorings.size() == 2);
    CHECK(merge_all(two_edges, {a, b}).size() == 1);

    Graph triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    auto t = merge_all(triangles, {{edges(triangles, {0, 1, 2}), {}}, {edges(triangles, {3, 4, 5}), {}}});
    REQUIRE(t.size() == 1);
    CHECK(t[0].red == edges(triangles, {0, 1, 2}));

    auto c4 = fixtures::cycle(4);
    auto p1 = edges(c4, {0, 1}), p2 = edges(c4, {2, 3});
    auto c = merge_all(c4, {{p1, swap_inclusive(c4, p1)}, {p2, swap_inclusive(c4, p2)}});
    CHECK(c == enumerate_brute_force(c4));

    CHECK_THROWS_AS(nac_product_merge(c4, {p1, {}}, {edges(c4, {1, 2}), {}}), ContractError);
}

TEST_CASE("merge_all on split prisms and the superset property") {
    auto prism = fixtures::prism();
    auto top = edges(prism, {0, 1, 2, 6, 7}), bottom = edges(prism, {3, 4, 5, 8});
    for (auto m : {MergeStrategy::Linear, MergeStrategy::SharedVertices}) {
        SearchConfig cfg;
        cfg.merge = m;
        auto out = merge_all(prism, {{top, swap_inclusive(prism, top)}, {bottom, swap_inclusive(prism, bottom)}}, cfg);
        CHECK(out == enumerate_brute_force(prism));
    }
    auto single = merge_all(prism, {{prism.all_edges(), swap_inclusive(prism, prism.all_edges())}});
    CHECK(single == enumerate_brute_force(prism));

    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = fixtures::random_gnp(7, 0.5, rng());
        if (g.edge_count() < 3 || g.edge_count() > 16)
            continue;
        // random split into three parts
        std::vector<EdgeSet> parts(3, g.empty_edge_set());
        for (int e = 0; e < g.edge_count(); ++e)
            parts[rng() % 3].set(static_cast<std::size_t>(e));
        std::vector<PartialResult> in;
        for (auto& p : parts)
            if (p.any())
                in.push_back({p, swap_inclusive(g, p)});
        for (auto m : {MergeStrategy::Linear, MergeStrategy::SharedVertices}) {
            SearchConfig cfg;
            cfg.merge = m;
            CheckStats st;
            CHECK(merge_all(g, in, cfg, &st) == enumerate_brute_force(g));
            CHECK(st.consistent());
        }
        if (in.size() >= 2) {
            auto r = nac_product_merge(g, in[0], in[1]);
            for (const auto& red : r.merged.colorings)
                for (const auto& part : {in[0], in[1]}) {
                    EdgeSet restricted = red & part.edges;
                    if (restricted.none() || restricted == part.edges)
                        continue;
                    CHECK(is_nac_coloring_on(g, part.edges, restricted));
                }
        }
    }
}

TEST_CASE("cycle pre-checks never increase full checks") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = fixtures::random_gnp(9, 0.45, rng());
        SearchConfig on, off;
        on.strategy = off.strategy = Strategy::None;
        off.use_cycles = false;
        auto a = enumerate(g, on);
        auto b = enumerate(g, off);
        const auto ra = a.collect(), rb = b.collect();
        CHECK(ra == rb);
        CHECK(a.stats().full_checks <= b.stats().full_checks);
        CHECK(a.stats().mask_candidates == b.stats().mask_candidates);
    }
}

TEST_CASE("fixed seed gives identical output") {
    auto g = fixtures::prism_chain(4, 3);
    for (const auto& cfg : all_configs()) {
        auto a = enumerate(g, cfg).collect();
        auto b = enumerate(g, cfg).collect();
        CHECK(a == b);
    }
}
