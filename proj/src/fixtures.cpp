#include "spexcess/fixtures.hpp"

#include <algorithm>
#include <fstream>

#include "spexcess/errors.hpp"

namespace spexcess::fixtures {

Graph complete(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph cycle(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph path(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  return Graph::from_edges(n, edges);
}

Graph star(int leaves) {
  std::vector<Edge> edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, edges);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(a + b, edges);
}

Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Graph::from_edges(10, edges);
}

Graph circulant(int n, const std::vector<int>& jumps) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int s : jumps) {
      int v = (u + s) % n;
      Edge e{std::min(u, v), std::max(u, v)};
      if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
    }
  }
  return Graph::from_edges(n, edges);
}

std::vector<NamedGraph> bundled() {
  std::vector<NamedGraph> out;
  out.push_back({"k23", complete_bipartite(2, 3)});
  out.push_back({"petersen", petersen()});
  out.push_back({"p3", path(3)});
  for (int n = 4; n <= 8; ++n) out.push_back({"c" + std::to_string(n), cycle(n)});
  for (int n = 2; n <= 5; ++n) out.push_back({"k" + std::to_string(n), complete(n)});
  out.push_back({"c8_12", circulant(8, {1, 2})});
  return out;
}

std::vector<std::filesystem::path> write_bundled(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  auto write = [&](const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) throw InputError("cannot write " + path.string());
    written.push_back(path);
  };
  for (const auto& [name, graph] : bundled()) {
    write(dir / (name + ".el"), to_edgelist(graph));
    write(dir / (name + ".g6"), to_graph6(graph));
  }
  return written;
}

}  // namespace spexcess::fixtures
