#include "lagpath/paths.hpp"

#include <numeric>

#include "lagpath/error.hpp"

namespace lagpath {
namespace {

bool weakly_below(int a, int b, long long x, long long y) {
  return static_cast<long long>(a) * y <= static_cast<long long>(b) * x;
}

void require_steep_endpoint(int a, int b, const char* what) {
  if (b < 1 || a <= b) {
    throw DomainError(std::string(what) + ": requires a > b >= 1, got (" +
                      std::to_string(a) + "," + std::to_string(b) + ")");
  }
}

}  // namespace

PathWord::PathWord(std::vector<Step> steps) : steps_(std::move(steps)) {
  if (steps_.empty()) throw DomainError("path word must be nonempty");
  for (Step s : steps_) {
    if (s == Step::R) {
      ++rights_;
    } else {
      ++ups_;
    }
  }
}

PathWord PathWord::parse(std::string_view text) {
  if (text.empty()) throw ParseError(0, "empty path word");
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'R':
      case 'r':
        steps.push_back(Step::R);
        break;
      case 'U':
      case 'u':
        steps.push_back(Step::U);
        break;
      default:
        throw ParseError(i, "invalid step '" + std::string(1, text[i]) +
                                "' at index " + std::to_string(i));
    }
  }
  return PathWord(std::move(steps));
}

std::string PathWord::str() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out.push_back(static_cast<char>(s));
  return out;
}

bool is_below_diagonal(const PathWord& word) {
  const int a = word.rights();
  const int b = word.ups();
  long long x = 0;
  long long y = 0;
  for (Step s : word.steps()) {
    (s == Step::R ? x : y) += 1;
    if (!weakly_below(a, b, x, y)) return false;
  }
  return true;
}

PathWord christoffel(int a, int b) {
  require_steep_endpoint(a, b, "christoffel");
  if (std::gcd(a, b) != 1) {
    throw DomainError("christoffel: a and b must be coprime, got (" +
                      std::to_string(a) + "," + std::to_string(b) + ")");
  }
  std::vector<Step> steps;
  steps.reserve(static_cast<std::size_t>(a + b));
  int x = 0;
  int y = 0;
  while (x < a || y < b) {
    if (y < b && weakly_below(a, b, x, y + 1)) {
      steps.push_back(Step::U);
      ++y;
    } else {
      steps.push_back(Step::R);
      ++x;
    }
  }
  return PathWord(std::move(steps));
}

PathWord corner_path(int a, int b) {
  if (a < 0 || b < 0 || a + b == 0) {
    throw DomainError("corner_path: need a, b >= 0 and a + b >= 1");
  }
  std::vector<Step> steps(static_cast<std::size_t>(a), Step::R);
  steps.insert(steps.end(), static_cast<std::size_t>(b), Step::U);
  return PathWord(std::move(steps));
}

std::vector<Block> blocks(const PathWord& word) {
  std::vector<Block> out;
  for (Step s : word.steps()) {
    if (!out.empty() && out.back().letter == s) {
      ++out.back().run;
    } else {
      out.push_back({s, 1});
    }
  }
  return out;
}

BigInt count_below_diagonal(int a, int b) {
  require_steep_endpoint(a, b, "count_below_diagonal");
  // ways[y] holds the count for the current column x.
  std::vector<BigInt> ways(static_cast<std::size_t>(b) + 1, 0);
  for (int x = 0; x <= a; ++x) {
    for (int y = 0; y <= b; ++y) {
      if (!weakly_below(a, b, x, y)) {
        ways[y] = 0;
        continue;
      }
      if (x == 0 && y == 0) {
        ways[y] = 1;
      } else if (y > 0) {
        ways[y] += ways[y - 1];
      }
    }
  }
  return ways[b];
}

BelowDiagonalPaths::BelowDiagonalPaths(int a, int b) : a_(a), b_(b) {
  require_steep_endpoint(a, b, "enumerate_below_diagonal");
}

std::optional<PathWord> BelowDiagonalPaths::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    // R^a U^b is the lexicographically smallest word and always qualifies.
    started_ = true;
    current_.assign(static_cast<std::size_t>(a_), Step::R);
    current_.insert(current_.end(), static_cast<std::size_t>(b_), Step::U);
    return PathWord(current_);
  }
  // Successor: the rightmost R that can become U while keeping the prefix
  // below the diagonal, followed by the smallest completion R* U*.
  const std::size_t n = current_.size();
  std::vector<int> rights_before(n + 1, 0);
  std::vector<int> ups_before(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    rights_before[i + 1] = rights_before[i] + (current_[i] == Step::R);
    ups_before[i + 1] = ups_before[i] + (current_[i] == Step::U);
  }
  for (std::size_t i = n; i-- > 0;) {
    if (current_[i] != Step::R) continue;
    const int x = rights_before[i];
    const int y = ups_before[i] + 1;
    if (y > b_ || !weakly_below(a_, b_, x, y)) continue;
    current_[i] = Step::U;
    std::size_t pos = i + 1;
    for (int k = x; k < a_; ++k) current_[pos++] = Step::R;
    for (int k = y; k < b_; ++k) current_[pos++] = Step::U;
    return PathWord(current_);
  }
  done_ = true;
  return std::nullopt;
}

std::vector<PathWord> enumerate_below_diagonal(int a, int b,
                                               std::uint64_t max_paths) {
  require_steep_endpoint(a, b, "enumerate_below_diagonal");
  const BigInt total = count_below_diagonal(a, b);
  if (total > max_paths) {
    throw ResourceError("enumeration of (" + std::to_string(a) + "," +
                        std::to_string(b) + ") has " + to_decimal(total) +
                        " paths, above the limit of " +
                        std::to_string(max_paths));
  }
  std::vector<PathWord> out;
  out.reserve(static_cast<std::size_t>(total));
  BelowDiagonalPaths stream(a, b);
  while (auto w = stream.next()) out.push_back(std::move(*w));
  return out;
}

PathWord exchange_move(const PathWord& word, std::size_t block_index) {
  const std::vector<Block> bl = blocks(word);
  if (block_index == 0 || block_index + 2 >= bl.size() ||
      bl[block_index].letter != Step::U) {
    throw ShapeError("exchange_move: block " + std::to_string(block_index) +
                     " of " + word.str() +
                     " is not an interior U-run followed by R-run and U");
  }
  // Blocks alternate: block_index - 1 and + 1 are R-runs, + 2 is a U-run.
  const int u = bl[block_index].run;
  const int r = bl[block_index + 1].run;
  std::size_t start = 0;
  for (std::size_t i = 0; i < block_index; ++i) {
    start += static_cast<std::size_t>(bl[i].run);
  }
  const auto steps = word.steps();
  // [S1] ends just before the R that precedes the U-run.
  std::vector<Step> out(steps.begin(), steps.begin() + (start - 1));
  out.insert(out.end(), static_cast<std::size_t>(r + 1), Step::R);
  out.insert(out.end(), static_cast<std::size_t>(u + 1), Step::U);
  // [S2] starts right after the first U of block_index + 2.
  const std::size_t tail = start + static_cast<std::size_t>(u + r) + 1;
  out.insert(out.end(), steps.begin() + tail, steps.end());
  return PathWord(std::move(out));
}

}  // namespace lagpath
