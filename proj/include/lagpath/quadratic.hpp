#pragma once

#include <compare>
#include <string>

#include "lagpath/bigint.hpp"
#include "lagpath/contfrac.hpp"
#include "lagpath/paths.hpp"

namespace lagpath {

/// Exact quadratic irrational (x + y*sqrt(disc)) / z.
///
/// Canonical form: z > 0, gcd(x, y, z) = 1, and rational values are stored
/// with y = 0 and disc = 0 (a perfect-square radicand is folded into x at
/// construction). The radicand is not reduced to its square-free part, so
/// two irrational operands of +, -, *, / must carry the same `disc`; a
/// rational operand is compatible with anything. Ordering works across
/// radicands and never touches floating point.
class Surd {
 public:
  Surd() = default;
  /// Throws ArithmeticError if z == 0, DomainError if disc < 0.
  Surd(BigInt x, BigInt y, BigInt z, BigInt disc);

  static Surd rational(BigInt num, BigInt den = 1) {
    return Surd(std::move(num), 0, std::move(den), 0);
  }
  static Surd rational(long long num, long long den = 1) {
    return rational(BigInt(num), BigInt(den));
  }
  static Surd rational(const Rational& r);
  /// sqrt(disc) / den
  static Surd root(BigInt disc, BigInt den = 1) {
    return Surd(0, 1, std::move(den), std::move(disc));
  }

  const BigInt& x() const noexcept { return x_; }
  const BigInt& y() const noexcept { return y_; }
  const BigInt& z() const noexcept { return z_; }
  const BigInt& disc() const noexcept { return disc_; }
  bool is_rational() const noexcept { return y_ == 0; }
  bool is_zero() const noexcept { return x_ == 0 && y_ == 0; }

  /// Throws ArithmeticError on zero.
  Surd inverse() const;

  /// "(x+y*sqrt(disc))/z" with the trivial parts dropped.
  std::string str() const;

  friend Surd operator-(const Surd& s);
  friend Surd operator+(const Surd& l, const Surd& r);
  friend Surd operator-(const Surd& l, const Surd& r);
  friend Surd operator*(const Surd& l, const Surd& r);
  friend Surd operator/(const Surd& l, const Surd& r);

  friend std::strong_ordering operator<=>(const Surd& l, const Surd& r);
  friend bool operator==(const Surd& l, const Surd& r) {
    return (l <=> r) == std::strong_ordering::equal;
  }

 private:
  BigInt x_ = 0;
  BigInt y_ = 0;
  BigInt z_ = 1;
  BigInt disc_ = 0;
};

/// Lagrange number of a periodic continued fraction in the form sqrt(disc)/q.
/// For a period matrix with trace t and determinant d, disc = t^2 - 4d and q
/// is the smallest lower-left entry over the scanned rotations.
struct LagrangeValue {
  BigInt disc;
  BigInt q;

  Surd to_surd() const { return Surd::root(disc, q); }
};

/// Order of sqrt(d1)/q1 against sqrt(d2)/q2 via d1*q2^2 against d2*q1^2.
std::strong_ordering lagrange_cmp(const LagrangeValue& l1,
                                  const LagrangeValue& l2);

inline bool operator==(const LagrangeValue& l, const LagrangeValue& r) {
  return lagrange_cmp(l, r) == std::strong_ordering::equal;
}
inline std::strong_ordering operator<=>(const LagrangeValue& l,
                                        const LagrangeValue& r) {
  return lagrange_cmp(l, r);
}

/// Value of the purely periodic fraction: the positive fixed point of the
/// Moebius map of the period matrix [[A, B], [C, D]], namely
/// ((A - D) + sqrt((A + D)^2 - 4 det)) / (2C).
Surd eval_purely_periodic(const PeriodicCF& period);

/// rho_k - rho_k' = a_k + [0, a_{k+1}, ..., a_k, ...] + [0, a_{k-1}, ..., a_k, ...]
Surd shift_contribution(const PeriodicCF& period, std::size_t k);

enum class LagrangeRoute {
  /// Trace discriminant and smallest lower-left entry over rotations that
  /// begin with 2 (all rotations if the period has no 2).
  kCanonical,
  /// Maximum of `shift_contribution` over every index.
  kDirect,
};

/// Throws std::logic_error if rotation invariance of the trace or
/// determinant fails, or if the direct maximum is not of the form sqrt(disc)/q.
LagrangeValue lagrange_of_period(const PeriodicCF& period,
                                 LagrangeRoute route = LagrangeRoute::kCanonical);

/// L(w) = Lagrange number of g(w).
LagrangeValue lagrange_number(const PathWord& word,
                              LagrangeRoute route = LagrangeRoute::kCanonical);

/// Largest shift contribution over all indices, as a surd.
Surd direct_lagrange(const PeriodicCF& period);

struct SplitCheck {
  bool ones_below_five_halves = true;        // a_k = 1: contribution < 5/2
  bool twos_at_least_one_plus_root3 = true;  // a_k = 2: contribution >= 1 + sqrt3
  bool holds() const {
    return ones_below_five_halves && twos_at_least_one_plus_root3;
  }
};

/// Checks the split-at-2 constants for every index of a {1,2}-period.
SplitCheck check_split_at_two(const PeriodicCF& period);

/// Two-sided bound on L(R^a U^b):
/// 1 + sqrt5 - (2^(3-2a) + 2^(3-2b)) < L < 1 + sqrt5.
struct CornerBoundCheck {
  LagrangeValue value;
  Surd lower;
  Surd upper;
  bool lower_ok = false;
  bool upper_ok = false;
  bool holds() const { return lower_ok && upper_ok; }
};

/// Requires a > b >= 1.
CornerBoundCheck bounds_check_L_max(int a, int b);

/// Correctly rounded (half up) decimal with `digits` fractional digits,
/// via integer square roots. Display only.
std::string decimal_approx(const Surd& value, int digits);
inline std::string decimal_approx(const LagrangeValue& value, int digits) {
  return decimal_approx(value.to_surd(), digits);
}

/// Same rounding for l - r, where l and r may carry different radicands.
std::string decimal_approx_difference(const Surd& l, const Surd& r, int digits);

}  // namespace lagpath
