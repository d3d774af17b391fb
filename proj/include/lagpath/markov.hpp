#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <string_view>
#include <vector>

#include "lagpath/bigint.hpp"
#include "lagpath/quadratic.hpp"

namespace lagpath {

/// Sorted solution x <= y <= z of x^2 + y^2 + z^2 = 3xyz.
struct MarkovTriple {
  BigInt x;
  BigInt y;
  BigInt z;

  friend bool operator==(const MarkovTriple&, const MarkovTriple&) = default;
  friend std::strong_ordering operator<=>(const MarkovTriple& l,
                                          const MarkovTriple& r);
};

/// Number of perfect matchings of the snake graph of the Christoffel path.
/// Requires a > b >= 1 and gcd(a, b) = 1.
BigInt markov_number(int a, int b);

inline constexpr std::size_t kDefaultMaxTriples = 1'000'000;

/// Breadth-first closure of (1,1,1) under the three Vieta moves, `depth`
/// levels deep, sorted. Throws ResourceError past `max_triples` and
/// std::logic_error if a generated triple fails the Markov equation.
std::vector<MarkovTriple> markov_tree(int depth,
                                      std::size_t max_triples = kDefaultMaxTriples);

/// Whether markov_number(a, b) is the largest entry of a triple within
/// `depth` levels of the root. Branches whose maximum exceeds the target are
/// cut, which is exact because maxima never decrease away from the root.
bool verify_markov_membership(int a, int b, int depth);

struct MarkovIdentity {
  BigInt m;
  LagrangeValue lagrange;
  BigInt lhs;  // disc * m^2
  BigInt rhs;  // (9 m^2 - 4) * q^2
  bool holds() const { return lhs == rhs; }
};

/// disc * m^2 == (9 m^2 - 4) q^2 for the Christoffel path to (a, b).
MarkovIdentity lagrange_markov_identity(int a, int b);

enum class SlopeVerdict { kConfirmed, kInapplicable, kViolated };

std::string_view verdict_name(SlopeVerdict v);  // "confirmed", ...

struct SlopeOrientation {
  /// (p, q) and (p', q') after putting the pair in the reading's order.
  int p = 0;
  int q = 0;
  int p2 = 0;
  int q2 = 0;
  bool tied = false;      // equal in the ordering coordinate: no prediction
  bool infinite = false;  // q == q' when ordered by p
  Rational slope;         // (p - p') / (q - q'), unless tied or infinite
  BigInt m;               // Markov number at (p, q)
  BigInt m2;              // Markov number at (p', q')
  SlopeVerdict verdict = SlopeVerdict::kInapplicable;
};

/// The inequality reads: for p > p', a slope of at least -8/7 predicts
/// m_{p/q} > m_{p'/q'} and a slope of at most -5/4 predicts the opposite;
/// between the two, and for p == p', it says nothing. Which integer of the
/// index (a, b) plays p is not pinned down, so three readings are reported.
struct SlopeCheck {
  SlopeOrientation as_given;    // p = a, q = b, ordered by p
  SlopeOrientation transposed;  // p = b, q = a, ordered by p
  /// p = b, q = a with the pair ordered by q instead (q > q'; q == q' says
  /// nothing). The slope is unchanged; only the predicted direction moves.
  SlopeOrientation transposed_by_q;

  bool any_violated() const {
    return as_given.verdict == SlopeVerdict::kViolated ||
           transposed.verdict == SlopeVerdict::kViolated ||
           transposed_by_q.verdict == SlopeVerdict::kViolated;
  }
};

/// Both pairs must satisfy the markov_number preconditions.
SlopeCheck slope_inequality_check(int a, int b, int a2, int b2);

}  // namespace lagpath
