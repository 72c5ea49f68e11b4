#include "nac/nac_check.hpp"

#include <algorithm>
#include <set>

namespace nac {

namespace {

bool lemma_check(const Graph& g, const EdgeSet& red, const EdgeSet& blue) {
    if (red.none() || blue.none())
        return false;
    const auto n = static_cast<std::size_t>(g.vertex_count());
    UnionFind red_uf(n), blue_uf(n);
    red.for_each([&](std::size_t e) { red_uf.unite(g.edge(static_cast<int>(e)).u, g.edge(static_cast<int>(e)).v); });
    blue.for_each([&](std::size_t e) { blue_uf.unite(g.edge(static_cast<int>(e)).u, g.edge(static_cast<int>(e)).v); });
    bool ok = true;
    blue.for_each([&](std::size_t e) {
        if (ok && red_uf.same(g.edge(static_cast<int>(e)).u, g.edge(static_cast<int>(e)).v))
            ok = false;
    });
    if (!ok)
        return false;
    red.for_each([&](std::size_t e) {
        if (ok && blue_uf.same(g.edge(static_cast<int>(e)).u, g.edge(static_cast<int>(e)).v))
            ok = false;
    });
    return ok;
}

}  // namespace

bool is_nac_coloring(const Graph& g, const EdgeSet& red, const EdgeSet& blue) {
    const auto m = static_cast<std::size_t>(g.edge_count());
    if (red.size() != m || blue.size() != m)
        throw ContractError("edge set size does not match the graph");
    if (red.intersects(blue) || (red | blue).count() != m)
        throw ContractError("red and blue must partition the edge set");
    return lemma_check(g, red, blue);
}

bool is_nac_coloring_on(const Graph& g, const EdgeSet& sub, const EdgeSet& red) {
    if (!red.is_subset_of(sub))
        throw ContractError("red edges must lie in the subgraph");
    EdgeSet blue = sub;
    blue.subtract(red);
    return lemma_check(g, red, blue);
}

namespace {

struct CycleSearch {
    const Graph& g;
    const MonochromaticPartition& p;
    const Bitset& allowed;
    int owner = 0;
    int target = 0;
    int length = 0;
    std::vector<int> path;  // vertices
    std::vector<int> path_classes;
    std::vector<char> on_path;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> found;  // (vertices, classes)

    void extend(int v) {
        const int depth = static_cast<int>(path_classes.size());
        const auto& nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            const int w = nb[i];
            const int cls = p.class_of_edge[g.incident_edges(v)[i]];
            if (cls == owner || !allowed.test(static_cast<std::size_t>(cls)))
                continue;
            if (std::find(path_classes.begin(), path_classes.end(), cls) != path_classes.end())
                continue;
            if (w == target) {
                if (depth + 1 == length && depth >= 1) {
                    path.push_back(w);
                    path_classes.push_back(cls);
                    found.emplace_back(path, path_classes);
                    path.pop_back();
                    path_classes.pop_back();
                }
                continue;
            }
            if (on_path[w] || depth + 1 >= length)
                continue;
            on_path[w] = 1;
            path.push_back(w);
            path_classes.push_back(cls);
            extend(w);
            path.pop_back();
            path_classes.pop_back();
            on_path[w] = 0;
        }
    }
};

}  // namespace

std::vector<CycleRecord> collect_small_cycles(const Graph& g, const MonochromaticPartition& p, const Bitset& allowed,
                                              int depth, int per_class) {
    if (depth < 1 || per_class < 1)
        throw ContractError("cycle depth and per-class count must be positive");
    const auto m = static_cast<std::size_t>(p.size());
    std::vector<CycleRecord> out;
    std::set<std::vector<Bitset::Word>> seen;
    CycleSearch search{g, p, allowed, 0, 0, 0, {}, {}, {}, {}};
    search.on_path.assign(static_cast<std::size_t>(g.vertex_count()), 0);

    for (int cls = 0; cls < p.size(); ++cls) {
        if (!allowed.test(static_cast<std::size_t>(cls)))
            continue;
        search.owner = cls;
        std::vector<CycleRecord> chosen;
        for (int len = 2; len <= depth && static_cast<int>(chosen.size()) < per_class; ++len) {
            search.length = len;
            search.found.clear();
            for (int e : p.classes[cls]) {
                const auto [u, v] = g.edge(e);
                search.target = v;
                search.path = {u};
                search.path_classes.clear();
                search.on_path[u] = 1;
                search.extend(u);
                search.on_path[u] = 0;
            }
            std::sort(search.found.begin(), search.found.end());
            for (auto& [verts, classes] : search.found) {
                if (static_cast<int>(chosen.size()) >= per_class)
                    break;
                CycleRecord rec;
                rec.class_mask = Bitset(m);
                rec.class_mask.set(static_cast<std::size_t>(cls));
                rec.class_list.push_back(cls);
                for (int c : classes) {
                    rec.class_mask.set(static_cast<std::size_t>(c));
                    rec.class_list.push_back(c);
                }
                rec.vertices = verts;
                const bool dup = std::any_of(chosen.begin(), chosen.end(),
                                             [&](const CycleRecord& r) { return r.class_mask == rec.class_mask; });
                if (!dup)
                    chosen.push_back(std::move(rec));
            }
        }
        for (auto& rec : chosen)
            if (seen.insert(rec.class_mask.words()).second)
                out.push_back(std::move(rec));
    }
    return out;
}

std::vector<CycleRecord> collect_small_cycles(const Graph& g, const MonochromaticPartition& p, int depth, int per_class) {
    return collect_small_cycles(g, p, Bitset::full(static_cast<std::size_t>(p.size())), depth, per_class);
}

ClassChecker::ClassChecker(const Graph& g, const MonochromaticPartition& p) {
    const int n = g.vertex_count();
    std::vector<int> classes_at(static_cast<std::size_t>(n), 0);
    for (int c = 0; c < p.size(); ++c)
        p.class_vertices[c].for_each([&](std::size_t v) { ++classes_at[v]; });
    std::vector<int> portal_id(static_cast<std::size_t>(n), -1);
    int portals = 0;
    for (int v = 0; v < n; ++v)
        if (classes_at[v] >= 2)
            portal_id[v] = portals++;
    portals_.resize(static_cast<std::size_t>(p.size()));
    groups_.resize(static_cast<std::size_t>(p.size()));
    critical_.resize(static_cast<std::size_t>(p.size()));
    UnionFind local(static_cast<std::size_t>(n));
    for (int c = 0; c < p.size(); ++c) {
        p.class_vertices[c].for_each([&](std::size_t v) { local.reset(static_cast<int>(v)); });
        for (int e : p.classes[c])
            local.unite(g.edge(e).u, g.edge(e).v);
        std::vector<std::pair<int, int>> by_root;  // (root, portal)
        p.class_vertices[c].for_each([&](std::size_t v) {
            if (portal_id[v] >= 0) {
                portals_[c].push_back(portal_id[v]);
                by_root.emplace_back(local.find(static_cast<int>(v)), portal_id[v]);
            }
        });
        std::sort(by_root.begin(), by_root.end());
        for (std::size_t i = 0; i < by_root.size(); ++i) {
            if (i == 0 || by_root[i].first != by_root[i - 1].first)
                groups_[c].emplace_back();
            groups_[c].back().push_back(by_root[i].second);
        }
        for (int e : p.classes[c]) {
            const auto [u, v] = g.edge(e);
            if (portal_id[u] >= 0 && portal_id[v] >= 0)
                critical_[c].emplace_back(portal_id[u], portal_id[v]);
        }
    }
    red_uf_ = UnionFind(static_cast<std::size_t>(portals));
    blue_uf_ = UnionFind(static_cast<std::size_t>(portals));
}

bool ClassChecker::check(const Bitset& red_mask, const std::vector<int>& subset) const {
    bool any_red = false, any_blue = false;
    for (int c : subset) {
        (red_mask.test(static_cast<std::size_t>(c)) ? any_red : any_blue) = true;
        for (int q : portals_[c]) {
            red_uf_.reset(q);
            blue_uf_.reset(q);
        }
    }
    if (!any_red || !any_blue)
        return false;
    for (int c : subset) {
        auto& uf = red_mask.test(static_cast<std::size_t>(c)) ? red_uf_ : blue_uf_;
        for (const auto& group : groups_[c])
            for (std::size_t i = 1; i < group.size(); ++i)
                uf.unite(group[0], group[i]);
    }
    for (int c : subset) {
        const auto& other = red_mask.test(static_cast<std::size_t>(c)) ? blue_uf_ : red_uf_;
        for (auto [a, b] : critical_[c])
            if (other.same(a, b))
                return false;
    }
    return true;
}

}  // namespace nac
