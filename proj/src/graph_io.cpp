#include <algorithm>
#include <charconv>
#include <map>
#include <set>

#include "nac/graph.hpp"

namespace nac {

namespace {

constexpr std::string_view graph6_header = ">>graph6<<";

[[noreturn]] void g6_error(const std::string& what, std::size_t offset) {
    throw ParseError("graph6: " + what + " at byte " + std::to_string(offset), offset);
}

int g6_byte(std::string_view text, std::size_t i) {
    if (i >= text.size())
        g6_error("unexpected end of input", i);
    const auto c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126)
        g6_error("character out of range (" + std::to_string(c) + ")", i);
    return c - 63;
}

void g6_append_size(std::string& out, std::uint64_t n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
}

}  // namespace

LabelledGraph parse_graph6(std::string_view text) {
    std::size_t pos = 0;
    if (text.substr(0, graph6_header.size()) == graph6_header)
        pos = graph6_header.size();

    std::uint64_t n = 0;
    const int first = g6_byte(text, pos);
    if (first < 63) {
        n = static_cast<std::uint64_t>(first);
        pos += 1;
    } else {
        const int second = g6_byte(text, pos + 1);
        if (second < 63) {
            for (std::size_t i = 1; i <= 3; ++i)
                n = (n << 6) | static_cast<std::uint64_t>(g6_byte(text, pos + i));
            if (n <= 62)
                g6_error("non-canonical length prefix", pos);
            pos += 4;
        } else {
            for (std::size_t i = 2; i <= 7; ++i)
                n = (n << 6) | static_cast<std::uint64_t>(g6_byte(text, pos + i));
            if (n <= 258047)
                g6_error("non-canonical length prefix", pos);
            pos += 8;
        }
    }
    if (n > 1'000'000)
        g6_error("graph too large (" + std::to_string(n) + " vertices)", pos);

    const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t bytes = (bits + 5) / 6;
    std::vector<std::pair<int, int>> edges;
    std::uint64_t bit = 0;
    int i = 0, j = 1;
    for (std::uint64_t b = 0; b < bytes; ++b) {
        const int value = g6_byte(text, pos + b);
        for (int k = 5; k >= 0 && bit < bits; --k, ++bit) {
            if ((value >> k) & 1)
                edges.emplace_back(i, j);
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    pos += bytes;
    // Tolerate one trailing line terminator.
    if (pos < text.size() && text[pos] == '\r')
        ++pos;
    if (pos < text.size() && text[pos] == '\n')
        ++pos;
    if (pos != text.size())
        g6_error("trailing garbage", pos);

    LabelledGraph out;
    out.graph = Graph(static_cast<int>(n), edges);
    out.original_ids.resize(n);
    for (std::uint64_t v = 0; v < n; ++v)
        out.original_ids[v] = static_cast<long long>(v);
    return out;
}

std::vector<LabelledGraph> parse_graph6_file(std::string_view text) {
    std::vector<LabelledGraph> out;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (!line.empty()) {
            try {
                out.push_back(parse_graph6(line));
            } catch (const ParseError& e) {
                throw ParseError(std::string(e.what()) + " (line starting at byte " + std::to_string(start) + ")",
                                 start + e.position());
            }
        }
        start = end + 1;
    }
    return out;
}

std::string to_graph6(const Graph& g) {
    const auto n = static_cast<std::uint64_t>(g.vertex_count());
    std::string out;
    g6_append_size(out, n);
    int value = 0, filled = 0;
    for (std::uint64_t j = 1; j < n; ++j) {
        for (std::uint64_t i = 0; i < j; ++i) {
            value = (value << 1) | (g.adjacent(static_cast<int>(i), static_cast<int>(j)) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + value));
                value = filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>(63 + (value << (6 - filled))));
    return out;
}

LabelledGraph parse_edge_list(std::string_view text) {
    std::vector<std::pair<long long, long long>> raw;
    std::set<std::pair<long long, long long>> seen;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(start, end - start);
        ++line_no;
        start = end + 1;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        auto fail = [&](const std::string& what) -> void {
            throw ParseError("edge list: " + what + " on line " + std::to_string(line_no), line_no);
        };
        std::vector<long long> tokens;
        std::size_t p = 0;
        while (p < line.size()) {
            while (p < line.size() && (line[p] == ' ' || line[p] == '\t'))
                ++p;
            if (p >= line.size() || line[p] == '#')
                break;
            std::size_t q = p;
            while (q < line.size() && line[q] != ' ' && line[q] != '\t')
                ++q;
            std::string_view tok = line.substr(p, q - p);
            long long value = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0)
                fail("invalid vertex id '" + std::string(tok) + "'");
            tokens.push_back(value);
            p = q;
        }
        if (tokens.empty())
            continue;
        if (tokens.size() != 2)
            fail("expected two vertex ids, got " + std::to_string(tokens.size()));
        auto a = tokens[0], b = tokens[1];
        if (a == b)
            fail("self-loop at vertex " + std::to_string(a));
        if (!seen.insert({std::min(a, b), std::max(a, b)}).second)
            fail("duplicate edge " + std::to_string(a) + " " + std::to_string(b));
        raw.emplace_back(a, b);
        if (end == text.size())
            break;
    }

    std::map<long long, int> dense;
    for (auto [a, b] : raw) {
        dense.emplace(a, 0);
        dense.emplace(b, 0);
    }
    LabelledGraph out;
    int next = 0;
    for (auto& [id, idx] : dense) {
        idx = next++;
        out.original_ids.push_back(id);
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(raw.size());
    for (auto [a, b] : raw)
        edges.emplace_back(dense[a], dense[b]);
    out.graph = Graph(next, edges);
    return out;
}

std::string to_edge_list(const Graph& g) {
    std::string out;
    for (const auto& e : g.edges())
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

}  // namespace nac
