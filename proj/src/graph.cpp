#include "spexcess/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <iterator>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "spexcess/errors.hpp"

namespace spexcess {

namespace {

constexpr int kGraph6MaxOrder = 1 << 18;

bool parse_index(std::string_view token, int& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size() && out >= 0;
}

bool is_connected(int n, const std::vector<std::vector<int>>& adj) {
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  return reached == n;
}

std::string_view trim(std::string_view s) {
  auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && ws(s.front())) s.remove_prefix(1);
  while (!s.empty() && ws(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

Graph Graph::from_edges(int n, std::span<const Edge> edges,
                        std::vector<std::string> labels) {
  if (n < 2) throw ParseError("graph must have at least two vertices");
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw ParseError("label count does not match vertex count");

  Graph g;
  g.n_ = n;
  std::set<Edge> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError("vertex id out of range: " + std::to_string(std::max(u, v)));
    if (u == v) throw LoopOrMultiEdgeError("loop at vertex " + std::to_string(u));
    Edge e{std::min(u, v), std::max(u, v)};
    if (!seen.insert(e).second)
      throw LoopOrMultiEdgeError("repeated edge " + std::to_string(e.first) + " " +
                                 std::to_string(e.second));
  }
  g.edges_.assign(seen.begin(), seen.end());

  g.neighbors_.assign(n, {});
  g.adjacency_ = Matrix::Zero(n, n);
  for (auto [u, v] : g.edges_) {
    g.neighbors_[u].push_back(v);
    g.neighbors_[v].push_back(u);
    g.adjacency_(u, v) = 1.0;
    g.adjacency_(v, u) = 1.0;
  }
  for (auto& nb : g.neighbors_) std::sort(nb.begin(), nb.end());
  if (!is_connected(n, g.neighbors_)) throw DisconnectedError();

  if (labels.empty()) {
    labels.reserve(n);
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  g.labels_ = std::move(labels);
  return g;
}

Graph parse_edgelist(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens{std::istream_iterator<std::string>(fields),
                                    std::istream_iterator<std::string>()};
    if (tokens.empty()) continue;
    if (tokens.size() != 2)
      throw ParseError("line " + std::to_string(lineno) + ": expected \"u v\"");
    pairs.emplace_back(tokens[0], tokens[1]);
  }
  if (pairs.empty()) throw ParseError("edge list is empty");

  bool numeric = true;
  int max_id = -1;
  for (const auto& [a, b] : pairs) {
    int x = 0;
    int y = 0;
    if (!parse_index(a, x) || !parse_index(b, y)) {
      numeric = false;
      break;
    }
    max_id = std::max({max_id, x, y});
  }

  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  if (numeric) {
    if (max_id >= kGraph6MaxOrder)
      throw ParseError("vertex id too large: " + std::to_string(max_id));
    for (const auto& [a, b] : pairs) {
      int x = 0;
      int y = 0;
      parse_index(a, x);
      parse_index(b, y);
      edges.emplace_back(x, y);
    }
    return Graph::from_edges(max_id + 1, edges);
  }

  std::map<std::string, int> ids;
  std::vector<std::string> labels;
  auto id_of = [&](const std::string& label) {
    auto [it, inserted] = ids.emplace(label, static_cast<int>(labels.size()));
    if (inserted) labels.push_back(label);
    return it->second;
  };
  for (const auto& [a, b] : pairs) {
    int x = id_of(a);
    int y = id_of(b);
    edges.emplace_back(x, y);
  }
  int n = static_cast<int>(labels.size());
  return Graph::from_edges(n, edges, std::move(labels));
}

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  if (auto nl = text.find('\n'); nl != std::string_view::npos) {
    if (!trim(text.substr(nl)).empty())
      throw ParseError("graph6: expected a single graph");
    text = trim(text.substr(0, nl));
  }
  if (text.empty()) throw ParseError("graph6: empty input");
  for (char c : text) {
    if (c < 63 || c > 126) throw ParseError("graph6: byte outside 63..126");
  }

  auto val = [&](std::size_t i) { return static_cast<int>(text[i]) - 63; };
  int n = 0;
  std::size_t pos = 0;
  if (val(0) < 63) {
    n = val(0);
    pos = 1;
  } else {
    if (text.size() < 4 || val(1) == 63)
      throw ParseError("graph6: orders of 2^18 or more are not supported");
    n = (val(1) << 12) | (val(2) << 6) | val(3);
    pos = 4;
  }

  std::size_t bits = static_cast<std::size_t>(n) * (n - (n > 0 ? 1 : 0)) / 2;
  std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes)
    throw ParseError("graph6: expected " + std::to_string(bytes) + " data bytes, found " +
                     std::to_string(text.size() - pos));

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = val(pos + k / 6);
      if ((byte >> (5 - static_cast<int>(k % 6))) & 1) edges.emplace_back(i, j);
    }
  }
  for (; k < bytes * 6; ++k) {
    if ((val(pos + k / 6) >> (5 - static_cast<int>(k % 6))) & 1)
      throw ParseError("graph6: nonzero padding bits");
  }
  return Graph::from_edges(n, edges);
}

Graph load_graph(std::istream& in, GraphFormat format) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (in.bad()) throw ParseError("failed to read input");
  return format == GraphFormat::graph6 ? parse_graph6(text) : parse_edgelist(text);
}

std::string to_edgelist(const Graph& g) {
  std::string out;
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  const Matrix& a = g.adjacency();
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (a(i, j) != 0.0 ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  out.push_back('\n');
  return out;
}

std::span<const int> DistanceData::sphere(int u, int i) const {
  if (i < 0 || i > eccentricity[u]) return {};
  return spheres[u][i];
}

std::vector<int> DistanceData::ball(int u, int i) const {
  std::vector<int> out;
  for (int k = 0; k <= std::min(i, eccentricity[u]); ++k) {
    auto s = sphere(u, k);
    out.insert(out.end(), s.begin(), s.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

DistanceData distance_data(const Graph& g) {
  const int n = g.order();
  DistanceData dd;
  dd.dist = Eigen::MatrixXi::Constant(n, n, -1);
  dd.eccentricity.assign(n, 0);
  dd.spheres.resize(n);

  std::queue<int> frontier;
  for (int s = 0; s < n; ++s) {
    dd.dist(s, s) = 0;
    frontier.push(s);
    while (!frontier.empty()) {
      int u = frontier.front();
      frontier.pop();
      for (int v : g.neighbors(u)) {
        if (dd.dist(s, v) < 0) {
          dd.dist(s, v) = dd.dist(s, u) + 1;
          frontier.push(v);
        }
      }
    }
    int ecc = dd.dist.row(s).maxCoeff();
    dd.eccentricity[s] = ecc;
    dd.spheres[s].assign(ecc + 1, {});
    for (int v = 0; v < n; ++v) dd.spheres[s][dd.dist(s, v)].push_back(v);
  }
  dd.diameter = *std::max_element(dd.eccentricity.begin(), dd.eccentricity.end());

  dd.distance_matrices.assign(dd.diameter + 1, Matrix::Zero(n, n));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) dd.distance_matrices[dd.dist(u, v)](u, v) = 1.0;
  return dd;
}

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile p;
  p.degrees.reserve(g.order());
  for (int u = 0; u < g.order(); ++u)
    p.degrees.push_back(static_cast<int>(g.neighbors(u).size()));
  p.is_regular = std::adjacent_find(p.degrees.begin(), p.degrees.end(),
                                    std::not_equal_to<>()) == p.degrees.end();
  return p;
}

}  // namespace spexcess
