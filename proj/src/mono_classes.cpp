#include "nac/mono_classes.hpp"

#include <algorithm>
#include <unordered_map>

#include "nac/union_find.hpp"

namespace nac {

MonochromaticPartition MonochromaticPartition::from_labels(const Graph& g, const std::vector<int>& label) {
    MonochromaticPartition p;
    p.class_of_edge.assign(static_cast<std::size_t>(g.edge_count()), -1);
    std::unordered_map<int, int> index;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [it, fresh] = index.emplace(label[e], p.size());
        if (fresh) {
            p.classes.emplace_back();
            p.class_vertices.emplace_back(static_cast<std::size_t>(g.vertex_count()));
        }
        const int c = it->second;
        p.class_of_edge[e] = c;
        p.classes[c].push_back(e);
        p.class_vertices[c].set(static_cast<std::size_t>(g.edge(e).u));
        p.class_vertices[c].set(static_cast<std::size_t>(g.edge(e).v));
    }
    return p;
}

MonochromaticPartition MonochromaticPartition::singletons(const Graph& g) {
    std::vector<int> label(static_cast<std::size_t>(g.edge_count()));
    for (int e = 0; e < g.edge_count(); ++e)
        label[e] = e;
    return from_labels(g, label);
}

EdgeSet MonochromaticPartition::edges_of(const Graph& g, const Bitset& class_mask) const {
    EdgeSet out = g.empty_edge_set();
    class_mask.for_each([&](std::size_t c) {
        for (int e : classes[c])
            out.set(static_cast<std::size_t>(e));
    });
    return out;
}

namespace {

void join_triangles(const Graph& g, UnionFind& uf) {
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto [u, v] = g.edge(e);
        const auto& nu = g.neighbors(u);
        const auto& nv = g.neighbors(v);
        std::size_t i = 0, j = 0;
        while (i < nu.size() && j < nv.size()) {
            if (nu[i] < nv[j]) {
                ++i;
            } else if (nv[j] < nu[i]) {
                ++j;
            } else {
                uf.unite(e, g.incident_edges(u)[i]);
                uf.unite(e, g.incident_edges(v)[j]);
                ++i;
                ++j;
            }
        }
    }
}

std::vector<int> labels_of(const Graph& g, const UnionFind& uf) {
    std::vector<int> label(static_cast<std::size_t>(g.edge_count()));
    for (int e = 0; e < g.edge_count(); ++e)
        label[e] = uf.find(e);
    return label;
}

// One pass of the merge rule. Vertex memberships are taken from the state at
// the start of the pass.
void merge_pass(const Graph& g, UnionFind& uf) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> member(static_cast<std::size_t>(n));
    for (int e = 0; e < g.edge_count(); ++e) {
        const int root = uf.find(e);
        member[g.edge(e).u].push_back(root);
        member[g.edge(e).v].push_back(root);
    }
    for (auto& m : member) {
        std::sort(m.begin(), m.end());
        m.erase(std::unique(m.begin(), m.end()), m.end());
    }
    std::unordered_map<int, int> first_edge_via;
    for (int v = 0; v < n; ++v) {
        first_edge_via.clear();
        const auto& nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            const int e = g.incident_edges(v)[i];
            for (int cls : member[nb[i]]) {
                auto [it, fresh] = first_edge_via.emplace(cls, e);
                if (!fresh)
                    uf.unite(it->second, e);
            }
        }
    }
}

UnionFind classes_to_union_find(const Graph& g, const MonochromaticPartition& p) {
    UnionFind uf(static_cast<std::size_t>(g.edge_count()));
    for (const auto& cls : p.classes)
        for (std::size_t i = 1; i < cls.size(); ++i)
            uf.unite(cls[0], cls[i]);
    return uf;
}

}  // namespace

MonochromaticPartition triangle_components(const Graph& g) {
    UnionFind uf(static_cast<std::size_t>(g.edge_count()));
    join_triangles(g, uf);
    return MonochromaticPartition::from_labels(g, labels_of(g, uf));
}

MonochromaticPartition monochromatic_classes(const Graph& g) {
    UnionFind uf(static_cast<std::size_t>(g.edge_count()));
    join_triangles(g, uf);
    std::size_t before;
    do {
        before = uf.version();
        merge_pass(g, uf);
    } while (uf.version() != before);
    return MonochromaticPartition::from_labels(g, labels_of(g, uf));
}

MonochromaticPartition apply_merge_rule_once(const Graph& g, const MonochromaticPartition& p) {
    UnionFind uf = classes_to_union_find(g, p);
    merge_pass(g, uf);
    return MonochromaticPartition::from_labels(g, labels_of(g, uf));
}

}  // namespace nac
