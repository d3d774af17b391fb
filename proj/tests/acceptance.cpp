// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "lagpath/contfrac.hpp"
#include "lagpath/markov.hpp"
#include "lagpath/orders.hpp"
#include "lagpath/paths.hpp"
#include "lagpath/quadratic.hpp"
#include "lagpath/snake.hpp"

using namespace lagpath;

namespace {

// Wall-clock budgets in seconds.
constexpr double kBudgetExamples = 1.0;
constexpr double kBudgetSnake = 300.0;
constexpr double kBudgetUniqueMax = 600.0;

constexpr int kMaxSum = 11;           // a + b for criteria 2-4
constexpr int kSplitMaxSum = 10;      // a + b for criterion 6
constexpr int kCornerMax = 13;        // 1 <= b < a <= 13
constexpr int kSupRows = 12;
constexpr int kMarkovMaxSum = 12;
constexpr int kMarkovDepth = 25;
constexpr int kRandomCases = 10'000;
constexpr std::uint64_t kSeed = 0x5eed;
constexpr unsigned kFibMax = 20;
constexpr std::size_t kCfMaxLength = 12;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Run {
  std::string out;
  int code = -1;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(LAGPATH_CLI_PATH) + " " + args;
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    r.out.append(buf.data(), n);
  }
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& s, const std::string& needle) {
  return s.find(needle) != std::string::npos;
}

// Calls fn(word) for every below-diagonal path with a > b >= 1, a + b <= max_sum.
void for_each_path(int max_sum, const std::function<void(const PathWord&)>& fn) {
  for (int a = 2; a < max_sum; ++a) {
    for (int b = 1; b < a && a + b <= max_sum; ++b) {
      BelowDiagonalPaths stream(a, b);
      while (auto w = stream.next()) fn(*w);
    }
  }
}

Outcome examples() {
  const PathWord w = PathWord::parse("RRRUURURU");
  const PathWord w2 = PathWord::parse("RRRUURRUU");
  bool ok = matching_number(w) == 1115 && matching_number(w2) == 1177;
  const LagrangeValue l = lagrange_number(w);
  const LagrangeValue l2 = lagrange_number(w2);
  ok = ok && l.disc == 11390621 && l.q == 1055;
  ok = ok && l2.disc == 14130077 && l2.q == 1177;
  ok = ok && l2 == LagrangeValue{BigInt(17 * 17) * 48893, 1177};
  const Classification c = classify_pair(w, w2);
  ok = ok && !c.swapped && c.relation == RelationClass::kMupLdown &&
       relation_text(c.relation) == "w <_M w' and w' <_L w";
  const Run r1 = run_cli("path RRRUURURU");
  const Run r2 = run_cli("path RRRUURRUU");
  ok = ok && r1.code == 0 && contains(r1.out, "\"M\":\"1115\"") &&
       contains(r1.out, "\"disc\":\"11390621\"") &&
       contains(r1.out, "\"q\":\"1055\"");
  ok = ok && r2.code == 0 && contains(r2.out, "\"M\":\"1177\"") &&
       contains(r2.out, "\"disc\":\"14130077\"") &&
       contains(r2.out, "\"q\":\"1177\"");
  return {ok, "M 1115/1177, L sqrt(11390621)/1055 and sqrt(14130077)/1177, " +
                  std::string(relation_tag(c.relation))};
}

Outcome snake_equivalence() {
  std::uint64_t paths = 0, bad = 0;
  for_each_path(kMaxSum, [&](const PathWord& w) {
    ++paths;
    if (count_perfect_matchings(build_snake(w)) != matching_number(w)) ++bad;
  });
  return {bad == 0, std::to_string(paths) + " paths, " + std::to_string(bad) +
                        " mismatches"};
}

Outcome unique_max() {
  int pairs = 0, bad = 0;
  for (int a = 2; a < kMaxSum; ++a) {
    for (int b = 1; b < a && a + b <= kMaxSum; ++b) {
      ++pairs;
      if (!verify_unique_max(a, b).holds()) ++bad;
    }
  }
  return {bad == 0, std::to_string(pairs) + " endpoints, " +
                        std::to_string(bad) + " failures"};
}

Outcome exchange_identity() {
  std::uint64_t moves = 0, zero = 0, bad = 0;
  for_each_path(kMaxSum, [&](const PathWord& w) {
    for (std::size_t i : exchange_positions(w)) {
      const ExchangeReport r = verify_exchange_identity(w, i);
      ++moves;
      if (r.difference == 0) ++zero;
      if (!r.holds()) ++bad;
    }
  });
  return {bad == 0 && moves > 0,
          std::to_string(moves) + " moves, " + std::to_string(zero) +
              " equalities, " + std::to_string(bad) + " failures"};
}

Outcome numerator_difference() {
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<int> len(0, 8);
  std::uniform_int_distribution<Entry> entry(1, 3);
  std::uniform_int_distribution<Entry> end(2, 3);
  const auto draw = [&] {
    std::vector<Entry> v(static_cast<std::size_t>(len(rng)));
    for (Entry& e : v) e = entry(rng);
    return v;
  };
  int bad = 0;
  for (int i = 0; i < kRandomCases; ++i) {
    const auto prefix = draw();
    const Entry a = end(rng);
    const auto middle = draw();
    const Entry b = end(rng);
    const auto suffix = draw();
    if (!verify_numerator_difference(prefix, a, middle, b, suffix).holds()) {
      ++bad;
    }
  }
  return {bad == 0, std::to_string(kRandomCases) + " cases, seed 0x5eed, " +
                        std::to_string(bad) + " failures"};
}

Outcome split_constants() {
  std::uint64_t paths = 0, bad = 0;
  for_each_path(kSplitMaxSum, [&](const PathWord& w) {
    ++paths;
    if (!check_split_at_two(g_period(w)).holds()) ++bad;
  });
  return {bad == 0, std::to_string(paths) + " periods, " +
                        std::to_string(bad) + " failures"};
}

Outcome corner_bounds() {
  int pairs = 0, bad = 0;
  for (int a = 2; a <= kCornerMax; ++a) {
    for (int b = 1; b < a; ++b) {
      ++pairs;
      if (!bounds_check_L_max(a, b).holds()) ++bad;
    }
  }
  int rows_bad = 0;
  const auto rows = sup_convergence_table(kSupRows);
  for (const SupRow& row : rows) rows_bad += row.holds() ? 0 : 1;
  const bool ok = bad == 0 && rows_bad == 0 &&
                  rows.size() == static_cast<std::size_t>(kSupRows);
  return {ok, std::to_string(pairs) + " corner paths, " +
                  std::to_string(rows.size()) + " table rows, " +
                  std::to_string(bad + rows_bad) + " failures"};
}

Outcome markov() {
  const std::array<std::array<int, 3>, 4> expected{
      {{2, 1, 5}, {3, 1, 13}, {3, 2, 29}, {4, 3, 169}}};
  bool ok = true;
  for (const auto& [a, b, m] : expected) {
    ok = ok && markov_number(a, b) == m &&
         verify_markov_membership(a, b, kMarkovDepth);
  }
  int checked = 0, bad = 0;
  for (int a = 2; a < kMarkovMaxSum; ++a) {
    for (int b = 1; b < a && a + b <= kMarkovMaxSum; ++b) {
      if (std::gcd(a, b) != 1) continue;
      ++checked;
      if (!lagrange_markov_identity(a, b).holds()) ++bad;
    }
  }
  return {ok && bad == 0, "5, 13, 29, 169 in tree; identity on " +
                              std::to_string(checked) + " pairs, " +
                              std::to_string(bad) + " failures"};
}

Outcome cf_identities() {
  int fib_bad = 0;
  for (unsigned s = 1; s <= kFibMax; ++s) {
    for (unsigned t = 1; t <= kFibMax; ++t) {
      if (!check_fib_identities(s, t).all()) ++fib_bad;
    }
  }
  std::vector<CfValue> values;
  std::vector<std::pair<std::int64_t, std::int64_t>> exact;
  for (std::size_t n = 1; n <= kCfMaxLength; ++n) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<Entry> e(n);
      for (std::size_t i = 0; i < n; ++i) e[i] = ((mask >> i) & 1u) + 1;
      const Mat2 m = cf_matrix(e);
      exact.emplace_back(static_cast<std::int64_t>(m.p),
                         static_cast<std::int64_t>(m.q));
      values.emplace_back(CFSeq(std::move(e)));
    }
  }
  std::uint64_t pairs = 0, bad = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = 0; j < values.size(); ++j) {
      ++pairs;
      const auto want =
          exact[i].first * exact[j].second <=> exact[j].first * exact[i].second;
      if (compare_cf(values[i], values[j]) != want) ++bad;
    }
  }
  return {fib_bad == 0 && bad == 0,
          std::to_string(kFibMax * kFibMax) + " (s,t) pairs, " +
              std::to_string(values.size()) + " sequences, " +
              std::to_string(pairs) + " comparisons, " +
              std::to_string(fib_bad + bad) + " failures"};
}

Outcome determinism() {
  const Run many = run_cli("enumerate 7 5 --jobs 8");
  const Run one = run_cli("enumerate 7 5 --jobs 1");
  const bool ok = many.code == 0 && one.code == 0 && !one.out.empty() &&
                  many.out == one.out;
  return {ok, std::to_string(one.out.size()) + " bytes, " +
                  (many.out == one.out ? "identical" : "differ")};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::function<Outcome()> check;
    double budget;  // seconds, 0 = none
  };
  const std::vector<Criterion> criteria{
      {1, examples, kBudgetExamples},
      {2, snake_equivalence, kBudgetSnake},
      {3, unique_max, kBudgetUniqueMax},
      {4, exchange_identity, 0},
      {5, numerator_difference, 0},
      {6, split_constants, 0},
      {7, corner_bounds, 0},
      {8, markov, 0},
      {9, cf_identities, 0},
      {10, determinism, 0},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    const bool in_time = c.budget == 0 || secs < c.budget;
    const bool pass = o.pass && in_time;
    if (!pass) ++failures;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << "criterion " << c.id << ": " << (pass ? "PASS" : "FAIL")
              << " (" << o.detail << "; " << timing
              << (in_time ? "" : ", over budget") << ")\n";
  }
  return failures == 0 ? 0 : 1;
}
