#pragma once

#include <vector>

#include "nac/graph.hpp"
#include "nac/mono_classes.hpp"
#include "nac/union_find.hpp"

namespace nac {

/// Red/blue coloring of monochromatic classes; a set bit means red.
struct ClassColoring {
    Bitset red_mask;

    bool surjective() const { return red_mask.any() && red_mask.count() < red_mask.size(); }
};

/// A short cycle whose edges lie in pairwise distinct classes.
struct CycleRecord {
    Bitset class_mask;
    std::vector<int> class_list;  ///< classes in cyclic order, starting with the class that owns the closing edge
    std::vector<int> vertices;    ///< cycle vertices in order, starting at the closing edge
};

/// Lemma-style check: both colors used, and no edge of one color joins two
/// vertices of the same component of the other color.
/// Throws ContractError unless red and blue partition E(g).
bool is_nac_coloring(const Graph& g, const EdgeSet& red, const EdgeSet& blue);

/// Same check on the edge-induced subgraph G[sub]; red must be a subset of sub
/// and blue is sub \ red.
bool is_nac_coloring_on(const Graph& g, const EdgeSet& sub, const EdgeSet& red);

/// Up to `per_class` short cycles per class: for each edge uv of class M, a u-v
/// path outside M with at most `depth` edges, each edge from a distinct class.
/// Fewer classes win, then lexicographically smaller vertex sequence. Cycles
/// with an already recorded class mask are dropped.
std::vector<CycleRecord> collect_small_cycles(const Graph& g, const MonochromaticPartition& p, int depth, int per_class);

/// As above, restricted to the subgraph formed by the classes in `allowed`.
std::vector<CycleRecord> collect_small_cycles(const Graph& g, const MonochromaticPartition& p, const Bitset& allowed,
                                              int depth, int per_class);

/// False iff the coloring makes the cycle almost red or almost blue.
inline bool cycle_mask_ok(const CycleRecord& c, const ClassColoring& coloring) {
    const std::size_t len = c.class_mask.count();
    const std::size_t red = Bitset::intersection_count(c.class_mask, coloring.red_mask);
    return red != 1 && red + 1 != len;
}

inline bool cycle_mask_ok(const CycleRecord& c, const Bitset& red_mask) {
    const std::size_t len = c.class_list.size();
    const std::size_t red = Bitset::intersection_count(c.class_mask, red_mask);
    return red != 1 && red + 1 != len;
}

/// Full check specialised to class-constant colorings.
///
/// Only vertices shared by two or more classes can join components of
/// different classes, and only edges with two such endpoints can close an
/// almost cycle, so the check touches those alone.
class ClassChecker {
public:
    ClassChecker() = default;
    ClassChecker(const Graph& g, const MonochromaticPartition& p);

    /// `red_mask` over all classes; classes outside `subset` are ignored.
    /// The coloring restricted to `subset` must be surjective.
    bool check(const Bitset& red_mask, const std::vector<int>& subset) const;

private:
    std::vector<std::vector<int>> portals_;                ///< per class, dense portal ids
    std::vector<std::vector<std::vector<int>>> groups_;  ///< per class, portals of each connected piece
    std::vector<std::vector<std::pair<int, int>>> critical_;
    mutable UnionFind red_uf_;
    mutable UnionFind blue_uf_;
};

}  // namespace nac
