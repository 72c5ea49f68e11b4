#pragma once

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace nac {

/// Disjoint sets with union by rank and path halving.
class UnionFind {
public:
    UnionFind() = default;
    explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t size() const { return parent_.size(); }

    int find(int x) const {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    /// Returns true if two distinct sets were joined.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        if (rank_[a] < rank_[b])
            std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b])
            ++rank_[a];
        ++unions_;
        return true;
    }

    bool same(int a, int b) const { return find(a) == find(b); }

    /// Resets a single element to a singleton. Only valid when no other element points at it.
    void reset(int x) {
        parent_[x] = x;
        rank_[x] = 0;
    }

    /// Number of successful unions so far; doubles as a change counter for fixpoint loops.
    std::size_t version() const { return unions_; }

private:
    mutable std::vector<int> parent_;
    std::vector<int> rank_;
    std::size_t unions_ = 0;
};

}  // namespace nac
