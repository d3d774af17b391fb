#include <doctest.h>

#include <bit>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "lagpath/error.hpp"
#include "lagpath/paths.hpp"

using namespace lagpath;

namespace {

PathWord W(const char* s) { return PathWord::parse(s); }

// Every word with a R's and b U's, by brute force over bit masks.
std::vector<PathWord> all_words(int a, int b) {
  std::vector<PathWord> out;
  const int n = a + b;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != b) continue;
    std::vector<Step> steps;
    for (int i = n - 1; i >= 0; --i) {
      steps.push_back((mask >> i) & 1u ? Step::U : Step::R);
    }
    out.emplace_back(std::move(steps));
  }
  return out;
}

// Ballot-style count, independent of the library's own DP.
std::uint64_t lattice_count(int a, int b) {
  std::vector<std::vector<std::uint64_t>> n(a + 1,
                                            std::vector<std::uint64_t>(b + 1));
  n[0][0] = 1;
  for (int x = 0; x <= a; ++x) {
    for (int y = 0; y <= b; ++y) {
      if ((x || y) && a * y <= b * x) {
        n[x][y] = (x ? n[x - 1][y] : 0) + (y ? n[x][y - 1] : 0);
      }
    }
  }
  return n[a][b];
}

}  // namespace

TEST_CASE("parse counts steps and round-trips") {
  const PathWord w = W("RRURU");
  CHECK(w.rights() == 3);
  CHECK(w.ups() == 2);
  CHECK(w.str() == "RRURU");
  const PathWord p = W("RRRUURURU");
  CHECK(p.rights() == 5);
  CHECK(p.ups() == 4);
  CHECK(W("rruRu").str() == "RRURU");
}

TEST_CASE("parse rejects bad input with an index") {
  try {
    (void)W("RXU");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.index() == 1);
  }
  CHECK_THROWS_AS(W(""), ParseError);
  CHECK_THROWS_AS(PathWord(std::vector<Step>{}), DomainError);
}

TEST_CASE("below-diagonal membership") {
  CHECK(is_below_diagonal(W("RRURU")));
  CHECK_FALSE(is_below_diagonal(W("RUR")));
  CHECK(is_below_diagonal(W("RRRUU")));
  CHECK(is_below_diagonal(W("RU")));
  CHECK_FALSE(is_below_diagonal(W("UR")));
}

TEST_CASE("christoffel paths") {
  CHECK(christoffel(3, 2).str() == "RRURU");
  CHECK(christoffel(2, 1).str() == "RRU");
  CHECK(christoffel(5, 2).str() == "RRRURRU");
  CHECK_THROWS_AS(christoffel(4, 2), DomainError);
  CHECK_THROWS_AS(christoffel(2, 3), DomainError);
  CHECK_THROWS_AS(christoffel(1, 0), DomainError);
}

TEST_CASE("christoffel touches the diagonal only at its ends") {
  for (int a = 2; a <= 14; ++a) {
    for (int b = 1; b < a; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const PathWord w = christoffel(a, b);
      CHECK(is_below_diagonal(w));
      int x = 0, y = 0;
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        (w[i] == Step::R ? x : y) += 1;
        CHECK(a * y < b * x);
      }
      if (a + b <= 16) {
        const auto all = enumerate_below_diagonal(a, b);
        CHECK(std::ranges::find(all, w) != all.end());
      }
    }
  }
}

TEST_CASE("blocks") {
  CHECK(blocks(W("RRRUU")) == std::vector<Block>{{Step::R, 3}, {Step::U, 2}});
  CHECK(blocks(W("RRURU")) == std::vector<Block>{{Step::R, 2},
                                                 {Step::U, 1},
                                                 {Step::R, 1},
                                                 {Step::U, 1}});
  CHECK(blocks(W("RRRUURURU")).size() == 6);
}

TEST_CASE("enumeration of small sets") {
  CHECK(enumerate_below_diagonal(2, 1) == std::vector<PathWord>{W("RRU")});
  CHECK(enumerate_below_diagonal(3, 2) ==
        std::vector<PathWord>{W("RRRUU"), W("RRURU")});
  CHECK(enumerate_below_diagonal(4, 3) ==
        std::vector<PathWord>{W("RRRRUUU"), W("RRRURUU"), W("RRRUURU"),
                              W("RRURRUU"), W("RRURURU")});
  const auto d54 = enumerate_below_diagonal(5, 4);
  CHECK(std::ranges::find(d54, W("RRRUURURU")) != d54.end());
  CHECK(std::ranges::find(d54, W("RRRUURRUU")) != d54.end());
  CHECK_THROWS_AS(enumerate_below_diagonal(3, 3), DomainError);
  CHECK_THROWS_AS(enumerate_below_diagonal(2, 0), DomainError);
  CHECK_THROWS_AS(enumerate_below_diagonal(9, 8, 10), ResourceError);
}

TEST_CASE("enumeration matches brute force and the ballot count") {
  // Frozen from the reference oracle.
  const std::map<std::pair<int, int>, std::uint64_t> frozen{
      {{2, 1}, 1},  {{3, 1}, 1},  {{3, 2}, 2},  {{4, 1}, 1},  {{4, 2}, 3},
      {{4, 3}, 5},  {{5, 1}, 1},  {{5, 2}, 3},  {{5, 3}, 7},  {{5, 4}, 14},
      {{6, 1}, 1},  {{6, 2}, 4},  {{6, 3}, 12}, {{6, 4}, 23}, {{6, 5}, 42},
      {{7, 1}, 1},  {{7, 2}, 4},  {{7, 3}, 12}, {{7, 4}, 30}, {{7, 5}, 66},
      {{7, 6}, 132}};
  for (int a = 2; a <= 9; ++a) {
    for (int b = 1; b < a; ++b) {
      const auto listed = enumerate_below_diagonal(a, b);
      CHECK(listed.size() == lattice_count(a, b));
      CHECK(count_below_diagonal(a, b) == lattice_count(a, b));
      if (auto it = frozen.find({a, b}); it != frozen.end()) {
        CHECK(listed.size() == it->second);
      }
      CHECK(std::ranges::is_sorted(listed));
      CHECK(std::set<PathWord>(listed.begin(), listed.end()).size() ==
            listed.size());
      if (a + b <= 14) {
        std::vector<PathWord> brute;
        for (const PathWord& w : all_words(a, b)) {
          if (is_below_diagonal(w)) brute.push_back(w);
        }
        CHECK(brute == listed);
      }
      for (const PathWord& w : listed) {
        CHECK(w[0] == Step::R);
        CHECK(w[w.size() - 1] == Step::U);
        CHECK(blocks(w).size() % 2 == 0);
      }
    }
  }
}

TEST_CASE("lazy stream equals the collected list") {
  BelowDiagonalPaths stream(6, 4);
  std::vector<PathWord> seen;
  while (auto w = stream.next()) seen.push_back(*w);
  CHECK(seen == enumerate_below_diagonal(6, 4));
  CHECK_FALSE(stream.next().has_value());
}

TEST_CASE("exchange move examples") {
  CHECK(exchange_move(W("RRURU"), 1).str() == "RRRUU");
  const PathWord w = W("RRRUURURU");
  const PathWord moved = exchange_move(w, 3);
  CHECK(moved.str() == "RRRUURRUU");
  CHECK(blocks(moved).size() == 4);
  CHECK_THROWS_AS(exchange_move(W("RRRUU"), 1), ShapeError);
  CHECK_THROWS_AS(exchange_move(W("RRURU"), 0), ShapeError);
  CHECK_THROWS_AS(exchange_move(W("RRURU"), 2), ShapeError);
  CHECK_THROWS_AS(exchange_move(W("RRURU"), 7), ShapeError);
}

TEST_CASE("exchange move preserves the endpoint and drops two blocks") {
  std::mt19937_64 rng(0x5eed);
  for (int trial = 0; trial < 400; ++trial) {
    const int a = std::uniform_int_distribution<int>(2, 10)(rng);
    const int b = std::uniform_int_distribution<int>(1, a - 1)(rng);
    const auto all = enumerate_below_diagonal(a, b);
    const PathWord& w =
        all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
    const auto bl = blocks(w);
    for (std::size_t k = 1; k + 2 < bl.size(); ++k) {
      if (bl[k].letter != Step::U) continue;
      const PathWord m = exchange_move(w, k);
      CHECK(m.rights() == a);
      CHECK(m.ups() == b);
      CHECK(blocks(m).size() + 2 == bl.size());
      CHECK(is_below_diagonal(m));
    }
  }
}
