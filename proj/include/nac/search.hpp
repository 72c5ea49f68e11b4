#pragma once

#include <chrono>
#include <cstdint>
#include <iterator>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nac/graph.hpp"
#include "nac/mono_classes.hpp"
#include "nac/nac_check.hpp"

namespace nac {

enum class Strategy { None, Neighbors, NeighborsDegree };
enum class MergeStrategy { Linear, SharedVertices };

std::string to_string(Strategy s);
std::string to_string(MergeStrategy s);
/// Throws std::invalid_argument on unknown names.
Strategy parse_strategy(const std::string& name);
MergeStrategy parse_merge_strategy(const std::string& name);

struct SearchConfig {
    Strategy strategy = Strategy::NeighborsDegree;
    MergeStrategy merge = MergeStrategy::Linear;
    int bag_size = 4;
    int cycles_depth = 4;
    int cycles_per_class = 2;
    bool use_cycles = true;
    bool use_blocks = true;
    std::uint64_t seed = 0;
    /// Wall-clock budget for one stream; SearchTimeout is thrown when exceeded.
    std::optional<std::chrono::milliseconds> timeout;

    void validate() const;
};

struct CheckStats {
    std::uint64_t mask_candidates = 0;
    std::uint64_t cycle_rejections = 0;
    std::uint64_t full_checks = 0;
    std::uint64_t found = 0;

    bool consistent() const { return full_checks <= mask_candidates && found <= full_checks; }
    CheckStats& operator+=(const CheckStats& o) {
        mask_candidates += o.mask_candidates;
        cycle_rejections += o.cycle_rejections;
        full_checks += o.full_checks;
        found += o.found;
        return *this;
    }
    friend bool operator==(const CheckStats&, const CheckStats&) = default;
};

/// A NAC-coloring of a target graph; red and blue partition its edges.
struct NacColoring {
    EdgeSet red;
    EdgeSet blue;

    /// Swap colors if needed so the smallest edge index is red.
    NacColoring canonical() const;
    friend bool operator==(const NacColoring&, const NacColoring&) = default;
    friend bool operator<(const NacColoring& a, const NacColoring& b) { return a.red < b.red; }
};

class SearchTimeout : public std::runtime_error {
public:
    SearchTimeout() : std::runtime_error("search timed out") {}
};

class OracleLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Single-consumer lazy stream of canonical NAC-colorings.
class ColoringStream {
public:
    struct Impl;

    explicit ColoringStream(std::unique_ptr<Impl> impl);
    ColoringStream(ColoringStream&&) noexcept;
    ColoringStream& operator=(ColoringStream&&) noexcept;
    ~ColoringStream();

    std::optional<NacColoring> next();
    /// Counters for all work done so far. `found` counts yielded colorings.
    const CheckStats& stats() const;

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = NacColoring;
        using difference_type = std::ptrdiff_t;
        using pointer = const NacColoring*;
        using reference = const NacColoring&;

        iterator() = default;
        explicit iterator(ColoringStream* s) : stream_(s) { ++*this; }
        reference operator*() const { return *current_; }
        pointer operator->() const { return &*current_; }
        iterator& operator++() {
            current_ = stream_->next();
            if (!current_)
                stream_ = nullptr;
            return *this;
        }
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& a, const iterator& b) { return a.stream_ == b.stream_; }

    private:
        ColoringStream* stream_ = nullptr;
        std::optional<NacColoring> current_;
    };

    iterator begin() { return iterator(this); }
    iterator end() { return iterator(); }

    std::vector<NacColoring> collect(std::optional<std::size_t> limit = std::nullopt);

private:
    std::unique_ptr<Impl> impl_;
};

/// All NAC-colorings by testing every edge coloring with edge 0 red.
/// Throws OracleLimitError above `edge_limit` edges.
std::vector<NacColoring> enumerate_brute_force(const Graph& g, int edge_limit = 22);

/// Every class mask with class 0 red, pre-checked against `cycles`, then fully checked.
ColoringStream enumerate_naive(const Graph& g, const MonochromaticPartition& p, std::vector<CycleRecord> cycles);

struct Bag {
    std::vector<int> class_indices;  ///< ascending
    EdgeSet edges;
    Bitset vertices;
};

std::vector<Bag> decompose(const Graph& g, const MonochromaticPartition& p, const SearchConfig& cfg);

/// Merge order over partial results. Leaves are 0..n-1; the i-th returned pair
/// creates node n+i from (left, right). The last node is the root.
std::vector<std::pair<int, int>> plan_merges(const std::vector<Bitset>& vertex_sets, const std::vector<std::size_t>& edge_counts,
                                             MergeStrategy strategy);

/// Colorings of an edge-induced subgraph of a host graph; each coloring is
/// its red edge set (blue is the rest of `edges`). Sets are swap-inclusive.
struct PartialResult {
    EdgeSet edges;
    std::vector<EdgeSet> colorings;
};

struct MergeResult {
    PartialResult merged;
    CheckStats stats;
};

/// NAC-product of two edge-disjoint subgraphs filtered down to the NAC-colorings
/// of their union. Inputs and output are swap-inclusive.
MergeResult nac_product_merge(const Graph& host, const PartialResult& first, const PartialResult& second,
                              const SearchConfig& cfg = {});

/// Merges all partial results in the order given by cfg.merge and returns the
/// canonical NAC-colorings of the union (smallest union edge red).
std::vector<NacColoring> merge_all(const Graph& host, std::vector<PartialResult> parts, const SearchConfig& cfg = {},
                                   CheckStats* stats = nullptr);

/// Lazy stream of all canonical NAC-colorings of g.
ColoringStream enumerate(const Graph& g, const SearchConfig& cfg = {});

/// Pulls only the first coloring. `stats`, if given, receives the counters.
bool exists(const Graph& g, const SearchConfig& cfg = {}, CheckStats* stats = nullptr);
std::optional<NacColoring> find_first(const Graph& g, const SearchConfig& cfg = {}, CheckStats* stats = nullptr);

}  // namespace nac
