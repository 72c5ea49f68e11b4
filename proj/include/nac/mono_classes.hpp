#pragma once

#include <vector>

#include "nac/graph.hpp"

namespace nac {

/// Partition of E(G) into monochromatic classes.
///
/// Classes are numbered by their smallest edge index, so class 0 always holds
/// edge 0 and the order is deterministic for a fixed edge order.
struct MonochromaticPartition {
    std::vector<std::vector<int>> classes;  ///< edge indices per class, ascending
    std::vector<int> class_of_edge;
    std::vector<Bitset> class_vertices;  ///< endvertices of the class's edges

    int size() const { return static_cast<int>(classes.size()); }

    /// Builds the partition from an edge -> representative map.
    static MonochromaticPartition from_labels(const Graph& g, const std::vector<int>& label);
    /// Every edge in its own class.
    static MonochromaticPartition singletons(const Graph& g);

    EdgeSet edges_of(const Graph& g, const Bitset& class_mask) const;
};

/// Classes of the reflexive-transitive closure of "shares a 3-cycle".
MonochromaticPartition triangle_components(const Graph& g);

/// Triangle components closed under the two-neighbors merge rule: whenever a
/// vertex v has neighbors u, w that are both vertices of one class, the
/// classes of vu and vw are merged. Repeats until no merge happens.
MonochromaticPartition monochromatic_classes(const Graph& g);

/// One pass of the merge rule over `p`; returns the merged partition.
/// Exposed for fixpoint tests.
MonochromaticPartition apply_merge_rule_once(const Graph& g, const MonochromaticPartition& p);

}  // namespace nac
