#include <doctest.h>

#include <bit>
#include <map>
#include <set>

#include "lagpath/contfrac.hpp"
#include "lagpath/error.hpp"
#include "lagpath/snake.hpp"

using namespace lagpath;

namespace {

PathWord W(const char* s) { return PathWord::parse(s); }

// Independent matching count: memoised over the bit set of covered vertices.
std::uint64_t memo_matchings(const SnakeGraph& g) {
  const std::size_t n = g.vertices().size();
  REQUIRE(n <= 63);
  std::vector<std::uint64_t> nbr(n, 0);
  for (const auto& [u, v] : g.edges()) {
    nbr[u] |= std::uint64_t{1} << v;
    nbr[v] |= std::uint64_t{1} << u;
  }
  const std::uint64_t full = n == 64 ? ~0ull : (std::uint64_t{1} << n) - 1;
  std::map<std::uint64_t, std::uint64_t> memo;
  auto rec = [&](auto&& self, std::uint64_t covered) -> std::uint64_t {
    if (covered == full) return 1;
    if (auto it = memo.find(covered); it != memo.end()) return it->second;
    const int v = std::countr_one(covered);
    std::uint64_t total = 0;
    std::uint64_t free = nbr[v] & ~covered;
    while (free) {
      const int u = std::countr_zero(free);
      free &= free - 1;
      total += self(self, covered | (std::uint64_t{1} << v) |
                              (std::uint64_t{1} << u));
    }
    memo.emplace(covered, total);
    return total;
  };
  return rec(rec, 0);
}

}  // namespace

TEST_CASE("snake graph sizes") {
  struct Row {
    const char* word;
    std::size_t tiles, vertices, edges;
    int matchings;
  };
  // Frozen from the reference oracle.
  for (const Row& r : {Row{"RU", 1, 4, 4, 2}, Row{"RRU", 3, 8, 10, 5},
                       Row{"RRURU", 7, 16, 22, 29},
                       Row{"RRRUURURU", 15, 32, 46, 1115},
                       Row{"RRRURRU", 11, 24, 34, 194}}) {
    const SnakeGraph g = build_snake(W(r.word));
    CHECK(g.tiles().size() == r.tiles);
    CHECK(g.vertices().size() == r.vertices);
    CHECK(g.edges().size() == r.edges);
    CHECK(count_perfect_matchings(g) == r.matchings);
  }
}

TEST_CASE("tiles of RRU") {
  const SnakeGraph g = build_snake(W("RRU"));
  std::vector<Point> anchors;
  for (const Tile& t : g.tiles()) anchors.push_back(t.anchor);
  CHECK(anchors == std::vector<Point>{{2, 0}, {3, 0}, {4, 0}});
}

TEST_CASE("graph is deduplicated and consecutive tiles share an edge") {
  for (int a = 2; a <= 7; ++a) {
    for (int b = 1; b < a; ++b) {
      for (const PathWord& w : enumerate_below_diagonal(a, b)) {
        const SnakeGraph g = build_snake(w);
        const std::size_t t = g.tiles().size();
        CHECK(t == static_cast<std::size_t>(2 * (a + b) - 3));
        CHECK(g.vertices().size() == 2 * t + 2);
        CHECK(g.edges().size() == 3 * t + 1);
        CHECK(std::set<Point>(g.vertices().begin(), g.vertices().end()).size() ==
              g.vertices().size());
        CHECK(std::ranges::is_sorted(g.edges()));
        for (std::size_t i = 0; i + 1 < g.tiles().size(); ++i) {
          const auto c1 = g.tiles()[i].corners();
          const auto c2 = g.tiles()[i + 1].corners();
          int shared = 0;
          for (Point p : c1) shared += std::ranges::count(c2, p);
          CHECK(shared == 2);
        }
      }
    }
  }
}

TEST_CASE("matchings equal the continued fraction numerator") {
  for (int a = 2; a <= 7; ++a) {
    for (int b = 1; b < a; ++b) {
      for (const PathWord& w : enumerate_below_diagonal(a, b)) {
        const SnakeGraph g = build_snake(w);
        const BigInt count = count_perfect_matchings(g);
        CHECK(count == matching_number(w));
        CHECK(count == memo_matchings(g));
      }
    }
  }
}

TEST_CASE("odd vertex counts and caps") {
  const SnakeGraph odd({Tile{{2, 0}}, Tile{{3, 1}}});  // touch at a corner
  CHECK(odd.vertices().size() % 2 == 1);
  CHECK(count_perfect_matchings(odd) == 0);
  CHECK_THROWS_AS(count_perfect_matchings(build_snake(W("RRURU")), 3),
                  ResourceError);
  CHECK_THROWS_AS(build_snake(W("R")), DomainError);
}

TEST_CASE("dot export is deterministic") {
  const SnakeGraph g = build_snake(W("RRURU"));
  const std::string dot = snake_to_dot(g, "RRURU");
  CHECK(dot == snake_to_dot(build_snake(W("RRURU")), "RRURU"));
  CHECK(dot.starts_with("graph snake {"));
  CHECK(dot.find("cluster_tile_6") != std::string::npos);
  CHECK(dot.find("pos=\"2,0!\"") != std::string::npos);
  CHECK(dot.ends_with("}\n"));
}
