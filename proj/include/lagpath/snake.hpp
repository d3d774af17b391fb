#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lagpath/bigint.hpp"
#include "lagpath/paths.hpp"

namespace lagpath {

/// Lattice point in doubled coordinates: (x, y) stands for (x/2, y/2).
struct Point {
  int x = 0;
  int y = 0;

  friend auto operator<=>(const Point&, const Point&) = default;
};

/// Half-unit square whose lower-right corner is `anchor`; its corners are
/// anchor, anchor + (0,1), anchor - (1,0) and anchor + (-1,1).
struct Tile {
  Point anchor;

  /// Corners in cyclic order starting at the lower-left.
  std::array<Point, 4> corners() const {
    return {Point{anchor.x - 1, anchor.y}, anchor,
            Point{anchor.x, anchor.y + 1}, Point{anchor.x - 1, anchor.y + 1}};
  }
};

class SnakeGraph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  explicit SnakeGraph(std::vector<Tile> tiles);

  /// Tiles in path-traversal order.
  const std::vector<Tile>& tiles() const noexcept { return tiles_; }
  /// Sorted, deduplicated corners.
  const std::vector<Point>& vertices() const noexcept { return vertices_; }
  /// Index pairs into `vertices()`, first < second, sorted and deduplicated.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::size_t vertex_index(Point p) const;

 private:
  std::vector<Tile> tiles_;
  std::vector<Point> vertices_;
  std::vector<Edge> edges_;
};

/// One tile per half-lattice point (i, j) of the path with i >= 1 and
/// j <= b - 1. Throws DomainError for single-step words.
SnakeGraph build_snake(const PathWord& word);

inline constexpr std::size_t kDefaultTileCap = 40;

/// Brute-force perfect-matching count: always branches on the lowest
/// uncovered vertex. Returns 0 for an odd vertex count. Throws ResourceError
/// if the graph has more than `tile_cap` tiles.
BigInt count_perfect_matchings(const SnakeGraph& graph,
                               std::size_t tile_cap = kDefaultTileCap);

/// Graphviz rendering with one cluster per tile, positioned by coordinates.
std::string snake_to_dot(const SnakeGraph& graph, const std::string& name);

}  // namespace lagpath
