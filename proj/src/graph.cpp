#include "nac/graph.hpp"

#include <algorithm>
#include <numeric>

namespace nac {

Graph::Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges)
    : adjacency_(static_cast<std::size_t>(vertex_count)), incident_(static_cast<std::size_t>(vertex_count)) {
    if (vertex_count < 0)
        throw ContractError("negative vertex count");
    edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count)
            throw ContractError("edge endpoint out of range: " + std::to_string(a) + " " + std::to_string(b));
        if (a == b)
            throw ContractError("self-loop at vertex " + std::to_string(a));
        if (a > b)
            std::swap(a, b);
        const int e = static_cast<int>(edges_.size());
        edges_.push_back({a, b});
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
        incident_[a].push_back(e);
        incident_[b].push_back(e);
    }
    for (std::size_t v = 0; v < adjacency_.size(); ++v) {
        auto& nb = adjacency_[v];
        auto& inc = incident_[v];
        std::vector<std::size_t> order(nb.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return nb[i] < nb[j]; });
        std::vector<int> nb2, inc2;
        nb2.reserve(nb.size());
        inc2.reserve(nb.size());
        for (auto i : order) {
            if (!nb2.empty() && nb2.back() == nb[i])
                throw ContractError("duplicate edge " + std::to_string(std::min<int>(static_cast<int>(v), nb[i])) + " " +
                                    std::to_string(std::max<int>(static_cast<int>(v), nb[i])));
            nb2.push_back(nb[i]);
            inc2.push_back(inc[i]);
        }
        nb = std::move(nb2);
        inc = std::move(inc2);
    }
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nb : adjacency_)
        d = std::max(d, static_cast<int>(nb.size()));
    return d;
}

int Graph::edge_index(int u, int v) const {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        return -1;
    const auto& nb = adjacency_[u];
    auto it = std::lower_bound(nb.begin(), nb.end(), v);
    if (it == nb.end() || *it != v)
        return -1;
    return incident_[u][static_cast<std::size_t>(it - nb.begin())];
}

Subgraph edge_subgraph(const Graph& g, const EdgeSet& edges) {
    Subgraph s;
    std::vector<int> local(static_cast<std::size_t>(g.vertex_count()), -1);
    Bitset verts = vertices_of(g, edges);
    verts.for_each([&](std::size_t v) {
        local[v] = static_cast<int>(s.parent_vertex.size());
        s.parent_vertex.push_back(static_cast<int>(v));
    });
    std::vector<std::pair<int, int>> list;
    edges.for_each([&](std::size_t e) {
        const auto& ed = g.edge(static_cast<int>(e));
        list.emplace_back(local[ed.u], local[ed.v]);
        s.parent_edge.push_back(static_cast<int>(e));
    });
    s.graph = Graph(static_cast<int>(s.parent_vertex.size()), list);
    return s;
}

Bitset vertices_of(const Graph& g, const EdgeSet& edges) {
    Bitset verts(static_cast<std::size_t>(g.vertex_count()));
    edges.for_each([&](std::size_t e) {
        verts.set(static_cast<std::size_t>(g.edge(static_cast<int>(e)).u));
        verts.set(static_cast<std::size_t>(g.edge(static_cast<int>(e)).v));
    });
    return verts;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> out;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0)
            continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        comp[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out[id].push_back(v);
            for (int w : g.neighbors(v))
                if (comp[w] < 0) {
                    comp[w] = id;
                    stack.push_back(w);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

std::vector<EdgeSet> blocks(const Graph& g) {
    // Iterative Hopcroft-Tarjan with an edge stack.
    const int n = g.vertex_count();
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<EdgeSet> out;
    std::vector<int> edge_stack;
    struct Frame {
        int v;
        int parent_edge;
        std::size_t next;
    };
    std::vector<Frame> frames;
    int timer = 0;
    for (int root = 0; root < n; ++root) {
        if (disc[root] >= 0)
            continue;
        disc[root] = low[root] = timer++;
        frames.push_back({root, -1, 0});
        while (!frames.empty()) {
            Frame& f = frames.back();
            const int v = f.v;
            if (f.next < g.neighbors(v).size()) {
                const int w = g.neighbors(v)[f.next];
                const int e = g.incident_edges(v)[f.next];
                ++f.next;
                if (e == f.parent_edge)
                    continue;
                if (disc[w] < 0) {
                    edge_stack.push_back(e);
                    disc[w] = low[w] = timer++;
                    frames.push_back({w, e, 0});
                } else if (disc[w] < disc[v]) {
                    edge_stack.push_back(e);
                    low[v] = std::min(low[v], disc[w]);
                }
                continue;
            }
            const int pe = f.parent_edge;
            frames.pop_back();
            if (frames.empty())
                break;
            const int u = frames.back().v;
            low[u] = std::min(low[u], low[v]);
            if (low[v] >= disc[u]) {
                EdgeSet block = g.empty_edge_set();
                while (true) {
                    const int top = edge_stack.back();
                    edge_stack.pop_back();
                    block.set(static_cast<std::size_t>(top));
                    if (top == pe)
                        break;
                }
                out.push_back(std::move(block));
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const EdgeSet& a, const EdgeSet& b) { return a.first() < b.first(); });
    return out;
}

}  // namespace nac
