#include "nac/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace nac::fixtures {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[rng() % i]);
}

double param(const std::map<std::string, double>& params, const std::string& key, double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

int int_param(const std::map<std::string, double>& params, const std::string& key, int fallback) {
    const double v = param(params, key, fallback);
    if (v != std::floor(v))
        throw std::invalid_argument("parameter " + key + " must be an integer");
    return static_cast<int>(v);
}

}  // namespace

Graph cycle(int n) {
    if (n < 3)
        throw std::invalid_argument("cycle needs at least 3 vertices");
    EdgeList e;
    for (int i = 0; i < n; ++i)
        e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

Graph complete(int n) {
    EdgeList e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            e.emplace_back(i, j);
    return Graph(n, e);
}

Graph path(int n) {
    EdgeList e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return Graph(std::max(n, 0), e);
}

Graph prism() { return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}}); }

Graph triangle_strip_with_chord() {
    return Graph(5, {{0, 1}, {0, 3}, {1, 3}, {1, 4}, {3, 4}, {1, 2}, {2, 4}, {0, 2}});
}

Graph triangle_strip_with_hat() {
    return Graph(6, {{0, 1}, {0, 3}, {1, 3}, {1, 4}, {3, 4}, {1, 2}, {2, 4}, {0, 5}, {2, 5}});
}

Graph prism_chain(int t, std::uint64_t seed) {
    if (t < 1)
        throw std::invalid_argument("prism chain needs at least one prism");
    EdgeList e;
    int a = 0, b = 1, next = 2;
    for (int i = 0; i < t; ++i) {
        const int c = next++, d = next++, f = next++, g = next++;
        // top triangle a-b-c, bottom triangle d-f-g, rungs a-d, b-f, c-g
        for (auto [u, v] : EdgeList{{a, b}, {b, c}, {a, c}, {d, f}, {f, g}, {d, g}, {a, d}, {b, f}, {c, g}})
            if (i == 0 || !(u == a && v == b))
                e.emplace_back(u, v);
        a = d;
        b = f;
    }
    const int n = next;
    std::mt19937_64 rng(seed);
    std::vector<int> relabel(static_cast<std::size_t>(n));
    std::iota(relabel.begin(), relabel.end(), 0);
    shuffle(relabel, rng);
    for (auto& [u, v] : e) {
        u = relabel[static_cast<std::size_t>(u)];
        v = relabel[static_cast<std::size_t>(v)];
    }
    shuffle(e, rng);
    return Graph(n, e);
}

Graph random_gnp(int n, double p, std::uint64_t seed) {
    if (n < 0 || p < 0.0 || p > 1.0)
        throw std::invalid_argument("random-gnp needs n >= 0 and 0 <= p <= 1");
    std::mt19937_64 rng(seed);
    EdgeList e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (uniform01(rng) < p)
                e.emplace_back(i, j);
    return Graph(n, e);
}

Graph grid_ladder(int rows, int cols, bool braced) {
    if (rows < 1 || cols < 1)
        throw std::invalid_argument("grid needs positive dimensions");
    auto id = [cols](int r, int c) { return r * cols + c; };
    EdgeList e;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols)
                e.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows)
                e.emplace_back(id(r, c), id(r + 1, c));
            if (braced && r + 1 < rows && c + 1 < cols)
                e.emplace_back(id(r + 1, c), id(r, c + 1));
        }
    return Graph(rows * cols, e);
}

std::vector<Graph> generate(const std::string& kind, const std::map<std::string, double>& params, std::uint64_t seed) {
    std::vector<Graph> out;
    if (kind == "cycles") {
        const int lo = int_param(params, "n_min", 4), hi = int_param(params, "n_max", 10);
        if (lo < 3 || hi < lo)
            throw std::invalid_argument("cycles needs 3 <= n_min <= n_max");
        for (int n = lo; n <= hi; ++n)
            out.push_back(cycle(n));
    } else if (kind == "prism-chains") {
        const int lo = int_param(params, "t_min", 1), hi = int_param(params, "t_max", 5);
        if (lo < 1 || hi < lo)
            throw std::invalid_argument("prism-chains needs 1 <= t_min <= t_max");
        for (int t = lo; t <= hi; ++t)
            out.push_back(prism_chain(t, seed + static_cast<std::uint64_t>(t)));
    } else if (kind == "random-gnp") {
        const int n = int_param(params, "n", 8), count = int_param(params, "count", 1);
        const double p = param(params, "p", 0.4);
        if (count < 1)
            throw std::invalid_argument("random-gnp needs count >= 1");
        for (int i = 0; i < count; ++i)
            out.push_back(random_gnp(n, p, seed + static_cast<std::uint64_t>(i)));
    } else if (kind == "grid-ladders") {
        const int rows = int_param(params, "rows", 2);
        const int lo = int_param(params, "cols_min", 2), hi = int_param(params, "cols_max", 6);
        const bool braced = param(params, "braced", 0) != 0;
        if (rows < 1 || lo < 1 || hi < lo)
            throw std::invalid_argument("grid-ladders needs rows >= 1 and 1 <= cols_min <= cols_max");
        for (int c = lo; c <= hi; ++c)
            out.push_back(grid_ladder(rows, c, braced));
    } else {
        throw std::invalid_argument("unknown fixture kind '" + kind + "'");
    }
    return out;
}

}  // namespace nac::fixtures
