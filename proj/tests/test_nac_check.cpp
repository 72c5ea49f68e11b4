#include <doctest.h>

#include <random>

#include "nac/fixtures.hpp"
#include "nac/nac_check.hpp"
#include "oracle.hpp"

using namespace nac;

namespace {

EdgeSet from_mask(const Graph& g, std::uint64_t mask) {
    EdgeSet s = g.empty_edge_set();
    for (int e = 0; e < g.edge_count(); ++e)
        if ((mask >> e) & 1U)
            s.set(static_cast<std::size_t>(e));
    return s;
}

Bitset classes(std::size_t m, std::initializer_list<int> idx) {
    Bitset b(m);
    for (int i : idx)
        b.set(static_cast<std::size_t>(i));
    return b;
}

}  // namespace

TEST_CASE("is_nac_coloring examples") {
    auto prism = fixtures::prism();
    auto rungs = from_mask(prism, 0b111000000);
    CHECK(is_nac_coloring(prism, rungs, rungs.complement()));
    CHECK(is_nac_coloring(prism, rungs.complement(), rungs));

    auto c4 = fixtures::cycle(4);
    CHECK_FALSE(is_nac_coloring(c4, from_mask(c4, 0b0111), from_mask(c4, 0b1000)));
    for (std::uint64_t r : {0b0011, 0b0101, 0b1001, 0b0110})
        CHECK(is_nac_coloring(c4, from_mask(c4, r), from_mask(c4, 0b1111 & ~r)));
    CHECK_FALSE(is_nac_coloring(c4, c4.all_edges(), c4.empty_edge_set()));
    CHECK_FALSE(is_nac_coloring(prism, prism.all_edges(), prism.empty_edge_set()));
}

TEST_CASE("is_nac_coloring contract violations") {
    auto c4 = fixtures::cycle(4);
    CHECK_THROWS_AS(is_nac_coloring(c4, from_mask(c4, 0b0011), from_mask(c4, 0b0110)), ContractError);
    CHECK_THROWS_AS(is_nac_coloring(c4, from_mask(c4, 0b0011), from_mask(c4, 0b0100)), ContractError);
    CHECK_THROWS_AS(is_nac_coloring(c4, EdgeSet(3), EdgeSet(3)), ContractError);
    CHECK_THROWS_AS(is_nac_coloring_on(c4, from_mask(c4, 0b0011), from_mask(c4, 0b0100)), ContractError);
}

TEST_CASE("is_nac_coloring matches the cycle definition on all graphs up to 5 vertices") {
    for (int n = 2; n <= 5; ++n) {
        oracle::for_each_connected_graph(n, [&](const Graph& g) {
            const int m = g.edge_count();
            const auto cycles = oracle::all_cycles(g);
            for (std::uint64_t red = 0; red < (std::uint64_t{1} << m); ++red) {
                auto r = from_mask(g, red);
                const bool got = is_nac_coloring(g, r, r.complement());
                REQUIRE(got == oracle::is_nac_by_definition(cycles, m, red));
            }
        });
    }
}

TEST_CASE("is_nac_coloring matches the cycle definition on 6-vertex samples") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j)
                if (rng() % 2)
                    e.emplace_back(i, j);
        Graph g(6, e);
        const int m = g.edge_count();
        const auto cycles = oracle::all_cycles(g);
        for (std::uint64_t red = 0; red < (std::uint64_t{1} << m); ++red) {
            auto r = from_mask(g, red);
            REQUIRE(is_nac_coloring(g, r, r.complement()) == oracle::is_nac_by_definition(cycles, m, red));
        }
    }
}

TEST_CASE("collect_small_cycles examples") {
    auto c4 = fixtures::cycle(4);
    auto p4 = monochromatic_classes(c4);
    auto cyc = collect_small_cycles(c4, p4, 4, 2);
    REQUIRE(cyc.size() == 1);
    CHECK(cyc[0].class_mask.count() == 4);
    CHECK(cyc[0].class_list.size() == 4);

    auto k4 = fixtures::complete(4);
    CHECK(collect_small_cycles(k4, monochromatic_classes(k4), 4, 2).empty());

    // prism classes: 0 = top triangle, 1 = bottom triangle, 2..4 = rungs 0-3, 1-4, 2-5
    auto prism = fixtures::prism();
    auto pp = monochromatic_classes(prism);
    auto pc = collect_small_cycles(prism, pp, 4, 2);
    std::set<std::vector<int>> masks;
    for (const auto& c : pc)
        masks.insert(c.class_mask.indices());
    CHECK(masks == std::set<std::vector<int>>{{0, 1, 2, 3}, {0, 1, 2, 4}, {0, 1, 3, 4}});
    // grouped by owning class, starting with the top triangle
    CHECK(pc[0].class_list[0] == 0);

    CHECK_THROWS_AS(collect_small_cycles(c4, p4, 0, 2), ContractError);
}

TEST_CASE("collect_small_cycles respects depth, distinct classes and the allowed subset") {
    auto c6 = fixtures::cycle(6);
    auto p6 = monochromatic_classes(c6);
    CHECK(collect_small_cycles(c6, p6, 4, 2).empty());
    CHECK(collect_small_cycles(c6, p6, 5, 2).size() == 1);

    auto prism = fixtures::prism();
    auto pp = monochromatic_classes(prism);
    Bitset allowed(5);
    for (int c : {0, 1, 2, 3})
        allowed.set(static_cast<std::size_t>(c));
    auto sub = collect_small_cycles(prism, pp, allowed, 4, 2);
    REQUIRE(sub.size() == 1);
    CHECK(sub[0].class_mask.indices() == std::vector<int>{0, 1, 2, 3});

    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = fixtures::random_gnp(9, 0.4, rng());
        auto p = monochromatic_classes(g);
        for (const auto& c : collect_small_cycles(g, p, 4, 2)) {
            std::set<int> distinct(c.class_list.begin(), c.class_list.end());
            CHECK(distinct.size() == c.class_list.size());
            CHECK(c.class_list.size() >= 3);
            CHECK(c.class_list.size() <= 5);
            CHECK(c.vertices.size() == c.class_list.size());
            // the closing edge runs from the last vertex back to the first
            const std::size_t len = c.vertices.size();
            for (std::size_t i = 0; i < len; ++i) {
                const int e = g.edge_index(c.vertices[(i + len - 1) % len], c.vertices[i]);
                REQUIRE(e >= 0);
                CHECK(p.class_of_edge[static_cast<std::size_t>(e)] == c.class_list[i]);
            }
        }
    }
}

TEST_CASE("cycle_mask_ok") {
    CycleRecord c{classes(6, {0, 1, 2, 3}), {0, 1, 2, 3}, {}};
    CHECK_FALSE(cycle_mask_ok(c, ClassColoring{classes(6, {0})}));
    CHECK_FALSE(cycle_mask_ok(c, ClassColoring{classes(6, {0, 1, 2})}));
    CHECK(cycle_mask_ok(c, ClassColoring{classes(6, {0, 1})}));
    CHECK(cycle_mask_ok(c, ClassColoring{classes(6, {4, 5})}));
    CycleRecord t{classes(3, {0, 1, 2}), {0, 1, 2}, {}};
    CHECK(cycle_mask_ok(t, ClassColoring{classes(3, {0, 1, 2})}));
    for (std::uint64_t r = 0; r < 64; ++r) {
        Bitset b(6);
        for (int i = 0; i < 6; ++i)
            if ((r >> i) & 1U)
                b.set(static_cast<std::size_t>(i));
        CHECK(cycle_mask_ok(c, b) == cycle_mask_ok(c, b.complement()));
    }
    CHECK(ClassColoring{classes(3, {1})}.surjective());
    CHECK_FALSE(ClassColoring{classes(3, {0, 1, 2})}.surjective());
    CHECK_FALSE(ClassColoring{Bitset(3)}.surjective());
}

TEST_CASE("pre-check soundness and the class checker agree with the full check") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 4);
        auto g = fixtures::random_gnp(n, 0.5, rng());
        auto p = monochromatic_classes(g);
        const int m = p.size();
        if (m < 2 || m > 14)
            continue;
        auto cycles = collect_small_cycles(g, p, 4, 2);
        ClassChecker checker(g, p);
        std::vector<int> all(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i)
            all[static_cast<std::size_t>(i)] = i;
        for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << m); ++mask) {
            Bitset red(static_cast<std::size_t>(m));
            for (int i = 0; i < m; ++i)
                if ((mask >> i) & 1U)
                    red.set(static_cast<std::size_t>(i));
            EdgeSet er = p.edges_of(g, red);
            const bool full = is_nac_coloring(g, er, er.complement());
            REQUIRE(checker.check(red, all) == full);
            for (const auto& c : cycles)
                if (!cycle_mask_ok(c, red))
                    REQUIRE_FALSE(full);
        }
    }
}

TEST_CASE("class checker on a class subset matches the check on the induced subgraph") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = fixtures::random_gnp(8, 0.45, rng());
        auto p = monochromatic_classes(g);
        const int m = p.size();
        if (m < 3 || m > 16)
            continue;
        ClassChecker checker(g, p);
        std::vector<int> subset;
        Bitset sub_mask(static_cast<std::size_t>(m));
        for (int c = 0; c < m; ++c)
            if (rng() % 2) {
                subset.push_back(c);
                sub_mask.set(static_cast<std::size_t>(c));
            }
        if (subset.size() < 2)
            continue;
        EdgeSet sub_edges = p.edges_of(g, sub_mask);
        for (int k = 0; k < 64; ++k) {
            Bitset red(static_cast<std::size_t>(m));
            for (int c : subset)
                if (rng() % 2)
                    red.set(static_cast<std::size_t>(c));
            // noise outside the subset must be ignored
            for (int c = 0; c < m; ++c)
                if (!sub_mask.test(static_cast<std::size_t>(c)) && rng() % 2)
                    red.set(static_cast<std::size_t>(c));
            Bitset in_sub = red & sub_mask;
            if (in_sub.none() || in_sub == sub_mask)
                continue;
            CHECK(checker.check(red, subset) == is_nac_coloring_on(g, sub_edges, p.edges_of(g, in_sub)));
        }
    }
}

TEST_CASE("class checker handles classes that are not connected") {
    // C_6 with opposite edges 0 and 3 forced into one class
    auto c6 = fixtures::cycle(6);
    auto p = MonochromaticPartition::from_labels(c6, {0, 1, 2, 0, 4, 5});
    ClassChecker checker(c6, p);
    std::vector<int> all{0, 1, 2, 3, 4};
    for (std::uint64_t mask = 1; mask < 31; ++mask) {
        Bitset red(5);
        for (int i = 0; i < 5; ++i)
            if ((mask >> i) & 1U)
                red.set(static_cast<std::size_t>(i));
        EdgeSet er = p.edges_of(c6, red);
        CHECK(checker.check(red, all) == is_nac_coloring(c6, er, er.complement()));
    }
}
