#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nac/graph.hpp"

namespace nac::fixtures {

Graph cycle(int n);
Graph complete(int n);
Graph path(int n);
/// Two triangles 0-1-2 and 3-4-5 joined by rungs 0-3, 1-4, 2-5.
Graph prism();
/// Triangles 0-1-3, 1-3-4, 1-2-4 plus the chord 0-2.
Graph triangle_strip_with_chord();
/// Triangles 0-1-3, 1-3-4, 1-2-4 plus vertex 5 adjacent to 0 and 2.
Graph triangle_strip_with_hat();

/// t 3-prisms where consecutive prisms share a triangle edge. Vertex IDs and
/// edge order are shuffled by `seed`.
Graph prism_chain(int t, std::uint64_t seed);
/// G(n, p) with a seeded 64-bit Mersenne Twister.
Graph random_gnp(int n, double p, std::uint64_t seed);
/// rows x cols grid; with `braced`, every square gets one diagonal.
Graph grid_ladder(int rows, int cols, bool braced);

/// Families by name: cycles (n_min, n_max), prism-chains (t_min, t_max),
/// random-gnp (n, p, count), grid-ladders (rows, cols_min, cols_max, braced).
/// Throws std::invalid_argument on unknown kinds or bad parameters.
std::vector<Graph> generate(const std::string& kind, const std::map<std::string, double>& params, std::uint64_t seed);

}  // namespace nac::fixtures
