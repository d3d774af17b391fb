#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lagpath/bigint.hpp"

namespace lagpath {

/// A unit lattice step. The enumerator values make `R < U`, which is the
/// lexicographic order used by every enumeration in the library.
enum class Step : char { R = 'R', U = 'U' };

/// A finite word over {R, U}, i.e. a monotone lattice path starting at the
/// origin. Immutable once built.
class PathWord {
 public:
  /// Throws DomainError on an empty step sequence.
  explicit PathWord(std::vector<Step> steps);

  /// Accepts upper- or lower-case letters. Throws ParseError naming the index
  /// of the first character outside {R, U}.
  static PathWord parse(std::string_view text);

  std::span<const Step> steps() const noexcept { return steps_; }
  std::size_t size() const noexcept { return steps_.size(); }
  Step operator[](std::size_t i) const { return steps_[i]; }

  /// Endpoint of the path: number of R and U steps.
  int rights() const noexcept { return rights_; }
  int ups() const noexcept { return ups_; }

  std::string str() const;

  friend bool operator==(const PathWord& lhs, const PathWord& rhs) {
    return lhs.steps_ == rhs.steps_;
  }
  friend std::strong_ordering operator<=>(const PathWord& lhs,
                                          const PathWord& rhs) {
    return lhs.steps_ <=> rhs.steps_;
  }

 private:
  std::vector<Step> steps_;
  int rights_ = 0;
  int ups_ = 0;
};

/// A maximal run of equal letters.
struct Block {
  Step letter;
  int run;

  friend bool operator==(const Block&, const Block&) = default;
};

/// True iff every prefix endpoint (x, y) satisfies a*y <= b*x, where (a, b)
/// is the endpoint of the whole word.
bool is_below_diagonal(const PathWord& word);

/// Greedy Christoffel path to (a, b): step up whenever the new point stays
/// weakly below the diagonal. Requires a > b >= 1 and gcd(a, b) = 1.
PathWord christoffel(int a, int b);

/// R^a U^b, the path hugging the lower-right corner.
PathWord corner_path(int a, int b);

std::vector<Block> blocks(const PathWord& word);

/// Size of the below-diagonal path set, by a ballot-style dynamic program.
BigInt count_below_diagonal(int a, int b);

/// Lazy lexicographic (R < U) stream over all below-diagonal paths from the
/// origin to (a, b). Requires a > b >= 1.
class BelowDiagonalPaths {
 public:
  BelowDiagonalPaths(int a, int b);

  /// Next path, or nullopt once the stream is exhausted.
  std::optional<PathWord> next();

 private:
  int a_;
  int b_;
  std::vector<Step> current_;
  bool started_ = false;
  bool done_ = false;
};

/// Default cap on the number of paths materialised by `enumerate_below_diagonal`.
inline constexpr std::uint64_t kDefaultMaxPaths = 1'000'000;

/// Collects the whole stream. Throws ResourceError if the set has more than
/// `max_paths` members (checked up front via `count_below_diagonal`).
std::vector<PathWord> enumerate_below_diagonal(
    int a, int b, std::uint64_t max_paths = kDefaultMaxPaths);

/// Rewrites [S1] R U^u R^r U [S2] into [S1] R^(r+1) U^(u+1) [S2], where the
/// U^u run is `blocks(word)[block_index]`. Throws ShapeError if the blocks
/// around `block_index` do not have that pattern.
PathWord exchange_move(const PathWord& word, std::size_t block_index);

}  // namespace lagpath
