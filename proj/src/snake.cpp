#include "lagpath/snake.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "lagpath/error.hpp"

namespace lagpath {
namespace {

struct Matcher {
  const std::vector<std::vector<std::size_t>>& adjacency;
  std::vector<char> covered;
  std::uint64_t count = 0;

  void run(std::size_t from) {
    std::size_t v = from;
    while (v < covered.size() && covered[v]) ++v;
    if (v == covered.size()) {
      ++count;
      return;
    }
    covered[v] = 1;
    for (std::size_t u : adjacency[v]) {
      if (covered[u]) continue;
      covered[u] = 1;
      run(v + 1);
      covered[u] = 0;
    }
    covered[v] = 0;
  }
};

}  // namespace

SnakeGraph::SnakeGraph(std::vector<Tile> tiles) : tiles_(std::move(tiles)) {
  for (const Tile& t : tiles_) {
    for (Point c : t.corners()) vertices_.push_back(c);
  }
  std::ranges::sort(vertices_);
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()),
                  vertices_.end());
  for (const Tile& t : tiles_) {
    const auto c = t.corners();
    for (std::size_t i = 0; i < 4; ++i) {
      std::size_t u = vertex_index(c[i]);
      std::size_t v = vertex_index(c[(i + 1) % 4]);
      if (u > v) std::swap(u, v);
      edges_.emplace_back(u, v);
    }
  }
  std::ranges::sort(edges_);
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

std::size_t SnakeGraph::vertex_index(Point p) const {
  const auto it = std::ranges::lower_bound(vertices_, p);
  if (it == vertices_.end() || *it != p) {
    throw DomainError("point is not a vertex of the snake graph");
  }
  return static_cast<std::size_t>(it - vertices_.begin());
}

SnakeGraph build_snake(const PathWord& word) {
  if (word.size() < 2) {
    throw DomainError("path too short for a snake graph: " + word.str());
  }
  const int top = 2 * (word.ups() - 1);
  std::vector<Tile> tiles;
  Point at{0, 0};
  auto visit = [&](Point p) {
    if (p.x >= 2 && p.y <= top) tiles.push_back({p});
  };
  visit(at);
  for (Step s : word.steps()) {
    for (int half = 0; half < 2; ++half) {
      (s == Step::R ? at.x : at.y) += 1;
      visit(at);
    }
  }
  return SnakeGraph(std::move(tiles));
}

BigInt count_perfect_matchings(const SnakeGraph& graph, std::size_t tile_cap) {
  if (graph.tiles().size() > tile_cap) {
    throw ResourceError("snake graph has " +
                        std::to_string(graph.tiles().size()) +
                        " tiles, above the brute-force cap of " +
                        std::to_string(tile_cap));
  }
  const std::size_t n = graph.vertices().size();
  if (n % 2 != 0) return 0;
  std::vector<std::vector<std::size_t>> adjacency(n);
  for (const auto& [u, v] : graph.edges()) {
    adjacency[u].push_back(v);
    adjacency[v].push_back(u);
  }
  Matcher m{adjacency, std::vector<char>(n, 0)};
  m.run(0);
  return BigInt(m.count);
}

std::string snake_to_dot(const SnakeGraph& graph, const std::string& name) {
  std::ostringstream out;
  out << "graph snake {\n";
  out << "  label=\"" << name << "\";\n";
  out << "  node [shape=point, width=0.08];\n";
  std::vector<char> declared(graph.vertices().size(), 0);
  const auto node_id = [](Point p) {
    return "v_" + std::to_string(p.x) + "_" + std::to_string(p.y);
  };
  for (std::size_t t = 0; t < graph.tiles().size(); ++t) {
    const Tile& tile = graph.tiles()[t];
    out << "  subgraph cluster_tile_" << t << " {\n";
    out << "    label=\"tile " << t << " (" << tile.anchor.x << "/2,"
        << tile.anchor.y << "/2)\";\n";
    for (Point c : tile.corners()) {
      const std::size_t idx = graph.vertex_index(c);
      if (declared[idx]) continue;
      declared[idx] = 1;
      out << "    " << node_id(c) << " [pos=\"" << c.x << "," << c.y
          << "!\"];\n";
    }
    out << "  }\n";
  }
  for (const auto& [u, v] : graph.edges()) {
    out << "  " << node_id(graph.vertices()[u]) << " -- "
        << node_id(graph.vertices()[v]) << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace lagpath
