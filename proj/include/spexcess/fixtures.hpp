#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "spexcess/graph.hpp"

namespace spexcess::fixtures {

Graph complete(int n);
Graph cycle(int n);
Graph path(int n);
Graph star(int leaves);
/// K_{a,b}; the a-side gets ids 0..a-1.
Graph complete_bipartite(int a, int b);
Graph petersen();
/// C_n(jumps): i ~ i ± s (mod n) for every s in `jumps`.
Graph circulant(int n, const std::vector<int>& jumps);

struct NamedGraph {
  std::string name;
  Graph graph;
};

/// K_{2,3}, Petersen, P_3, C_4..C_8, K_2..K_5 and C_8(1,2), in a fixed order.
std::vector<NamedGraph> bundled();

/// Writes <name>.el and <name>.g6 for every bundled graph; returns paths written.
std::vector<std::filesystem::path> write_bundled(const std::filesystem::path& dir);

}  // namespace spexcess::fixtures
