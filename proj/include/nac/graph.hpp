#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nac/bitset.hpp"

namespace nac {

using EdgeSet = Bitset;

struct Edge {
    int u;
    int v;
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Raised by the text parsers. `position` is a byte offset (graph6) or a
/// 1-based line number (edge lists, DIMACS), as stated by `what()`.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t position) : std::runtime_error(msg), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Violated preconditions of a library call.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Immutable simple graph on vertices 0..n-1 with stable edge indices.
///
/// Edges are stored with u < v in insertion order; that order is the tie-break
/// order for everything downstream.
class Graph {
public:
    Graph() = default;
    /// Throws ContractError on self-loops, duplicates or out-of-range endpoints.
    Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return static_cast<int>(adjacency_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const { return edges_[e]; }

    /// Neighbors of v in increasing order.
    const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
    /// Edge indices incident to v, parallel to neighbors(v).
    const std::vector<int>& incident_edges(int v) const { return incident_[v]; }
    int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
    int max_degree() const;

    /// Edge index of {u, v}, or -1.
    int edge_index(int u, int v) const;
    bool adjacent(int u, int v) const { return edge_index(u, v) >= 0; }

    EdgeSet empty_edge_set() const { return EdgeSet(edges_.size()); }
    EdgeSet all_edges() const { return EdgeSet::full(edges_.size()); }

    friend bool operator==(const Graph& a, const Graph& b) { return a.edges_ == b.edges_ && a.vertex_count() == b.vertex_count(); }

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adjacency_;
    std::vector<std::vector<int>> incident_;
};

/// A graph plus the original vertex IDs it was relabelled from.
struct LabelledGraph {
    Graph graph;
    std::vector<long long> original_ids;  ///< original_ids[v] is the input ID of dense vertex v
};

/// Edge-induced subgraph of a parent graph, relabelled to dense vertex IDs.
/// Vertices and edges keep the parent's relative order.
struct Subgraph {
    Graph graph;
    std::vector<int> parent_vertex;
    std::vector<int> parent_edge;
};

Subgraph edge_subgraph(const Graph& g, const EdgeSet& edges);

LabelledGraph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);
/// Parses every non-empty line of a graph6 file.
std::vector<LabelledGraph> parse_graph6_file(std::string_view text);

LabelledGraph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

std::vector<std::vector<int>> connected_components(const Graph& g);
/// Bridges and maximal 2-connected subgraphs as edge sets, sorted by smallest edge index.
std::vector<EdgeSet> blocks(const Graph& g);
/// Vertices of the edge-induced subgraph G[edges].
Bitset vertices_of(const Graph& g, const EdgeSet& edges);

}  // namespace nac
