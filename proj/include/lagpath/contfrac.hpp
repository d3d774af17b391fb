#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "lagpath/bigint.hpp"
#include "lagpath/paths.hpp"

namespace lagpath {

using Entry = std::uint64_t;

/// Finite continued fraction [a_0, a_1, ..., a_t] with every a_i >= 1.
class CFSeq {
 public:
  /// Throws DomainError if `entries` is empty or holds a zero.
  explicit CFSeq(std::vector<Entry> entries);

  std::span<const Entry> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  friend bool operator==(const CFSeq&, const CFSeq&) = default;

 private:
  std::vector<Entry> entries_;
};

/// Purely periodic continued fraction [period, period, ...].
class PeriodicCF {
 public:
  explicit PeriodicCF(std::vector<Entry> period);

  std::span<const Entry> period() const noexcept { return period_; }
  std::size_t size() const noexcept { return period_.size(); }
  Entry at(std::size_t i) const { return period_[i % period_.size()]; }

  /// Period read from index k onwards: a_k, a_{k+1}, ..., a_{k-1}.
  PeriodicCF rotated(std::size_t k) const;
  /// Period read backwards from index k: a_k, a_{k-1}, ..., a_{k+1}.
  PeriodicCF reversed_from(std::size_t k) const;

  friend bool operator==(const PeriodicCF&, const PeriodicCF&) = default;

 private:
  std::vector<Entry> period_;
};

/// 2x2 integer matrix laid out as [[p, p_prev], [q, q_prev]], the shape of a
/// continued-fraction matrix product.
struct Mat2 {
  BigInt p = 1;
  BigInt p_prev = 0;
  BigInt q = 0;
  BigInt q_prev = 1;

  static Mat2 identity() { return {}; }
  /// [[a, 1], [1, 0]]
  static Mat2 elementary(Entry a) { return {BigInt(a), 1, 1, 0}; }

  BigInt det() const { return p * q_prev - p_prev * q; }
  BigInt trace() const { return p + q_prev; }
  Mat2 transposed() const { return {p, q, p_prev, q_prev}; }

  friend Mat2 operator*(const Mat2& l, const Mat2& r) {
    return {l.p * r.p + l.p_prev * r.q, l.p * r.p_prev + l.p_prev * r.q_prev,
            l.q * r.p + l.q_prev * r.q, l.q * r.p_prev + l.q_prev * r.q_prev};
  }
  friend bool operator==(const Mat2&, const Mat2&) = default;
};

struct Convergent {
  BigInt p;
  BigInt q;

  friend bool operator==(const Convergent&, const Convergent&) = default;
};

/// f(w): for each adjacent pair of steps append 1,1 if equal and 2 otherwise.
/// Throws DomainError for single-step words, which have no pairs.
CFSeq path_to_cf(const PathWord& word);

/// Convergents p_i/q_i via the two-term recurrence seeded with
/// p_{-1} = 1, q_{-1} = 0, p_{-2} = 0, q_{-2} = 1.
std::vector<Convergent> convergents(std::span<const Entry> entries);

/// Product of elementary matrices. An empty sequence gives the identity, the
/// convention used when a prefix, middle or suffix is absent.
Mat2 cf_matrix(std::span<const Entry> entries);
inline Mat2 cf_matrix(const CFSeq& cf) { return cf_matrix(cf.entries()); }

BigInt numerator(const CFSeq& cf);

/// Exact value p/q of a finite continued fraction.
Rational cf_rational(const CFSeq& cf);

/// Number of perfect matchings of the snake graph of `word`, computed as the
/// numerator of f(word).
BigInt matching_number(const PathWord& word);

/// g(w): the period 2 followed by f(w).
PeriodicCF g_period(const PathWord& word);

/// F_0 = 0, F_1 = 1.
BigInt fibonacci(unsigned t);

struct FibIdentityCheck {
  bool all_ones = false;        // [1^t] = F_{t+1}/F_t
  bool two_then_ones = false;   // [2, 1^t] = F_{t+3}/F_{t+1}
  bool ones_two_ones = false;   // [1^s, 2, 1^t] closed form
  bool all() const { return all_ones && two_then_ones && ones_two_ones; }
};

/// Evaluates both sides of each identity exactly. Requires s, t >= 1.
FibIdentityCheck check_fib_identities(unsigned s, unsigned t);

using CfValue = std::variant<CFSeq, PeriodicCF>;

/// Exact comparison by the alternating first-difference rule. Finite
/// sequences are padded with an infinite entry; before padding, a trailing 1
/// is folded into its predecessor ([.., a, 1] = [.., a + 1]) so the rule sees
/// the unique expansion.
std::strong_ordering compare_cf(const CfValue& x, const CfValue& y);

/// Bound 1/2^(k-2) on |x - y| when x and y first differ at index k >= 1.
Rational gap_bound(int k);

}  // namespace lagpath
