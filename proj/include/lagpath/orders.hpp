#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lagpath/bigint.hpp"
#include "lagpath/contfrac.hpp"
#include "lagpath/paths.hpp"
#include "lagpath/quadratic.hpp"

namespace lagpath {

enum class OrderKind { kMatching, kLagrange };

std::string_view order_name(OrderKind order);  // "M" or "L"

/// A path with its matching number M and Lagrange number L.
struct OrderedEntry {
  PathWord path;
  BigInt matching;
  LagrangeValue lagrange;
};

OrderedEntry make_entry(const PathWord& word,
                        LagrangeRoute route = LagrangeRoute::kCanonical);

/// Entries for every word, computed on `jobs` threads, in input order.
std::vector<OrderedEntry> make_entries(
    std::span<const PathWord> words, unsigned jobs = 1,
    LagrangeRoute route = LagrangeRoute::kCanonical);

std::strong_ordering cmp_M(const PathWord& w1, const PathWord& w2);
std::strong_ordering cmp_L(const PathWord& w1, const PathWord& w2);
std::strong_ordering compare_entries(const OrderedEntry& e1,
                                     const OrderedEntry& e2, OrderKind order);

struct UniqueMaxReport {
  int a = 0;
  int b = 0;
  std::size_t path_count = 0;
  OrderedEntry maximum;  // R^a U^b
  /// Best other path under each order; first in lexicographic order on ties.
  std::optional<OrderedEntry> runner_up_matching;
  std::optional<OrderedEntry> runner_up_lagrange;
  bool unique_under_matching = false;
  bool unique_under_lagrange = false;

  bool holds() const { return unique_under_matching && unique_under_lagrange; }
};

/// Checks that R^a U^b strictly beats every other below-diagonal path under
/// both orders. Throws ResourceError past `max_paths`.
UniqueMaxReport verify_unique_max(int a, int b,
                                  std::uint64_t max_paths = kDefaultMaxPaths,
                                  unsigned jobs = 1);

/// Exchange-move identity at one position:
///   M(w') - M(w) = 2 F_{2u} F_{2r} (p_k s_l + p_{k-1} r_l + p_{k-1} s_l)
/// where p/q are the convergents of f([S1] R) and r/s those of f(U [S2]),
/// empty sequences taking the identity-matrix convention.
struct ExchangeReport {
  PathWord before;
  PathWord after;
  std::size_t block_index = 0;
  int u = 0;
  int r = 0;
  std::string prefix;  // [S1]
  BigInt m_before;
  BigInt m_after;
  BigInt difference;
  BigInt predicted;
  /// u_{m-1} + v_m + v_{m-1} of the middle window; must equal 2 F_{2u} F_{2r}.
  BigInt middle_factor;
  bool identity_holds = false;
  bool middle_factor_matches = false;
  bool strict = false;
  /// A zero difference only occurs when [S1] is empty or the single step U.
  bool equality_clause_ok = false;

  bool holds() const {
    return identity_holds && middle_factor_matches && equality_clause_ok;
  }
};

/// Throws ShapeError where `exchange_move` would.
ExchangeReport verify_exchange_identity(const PathWord& word,
                                        std::size_t block_index);

/// Block indices at which `exchange_move` applies.
std::vector<std::size_t> exchange_positions(const PathWord& word);

/// Closed-form numerator difference between
///   alpha  = [prefix, A, middle, B, suffix] and
///   alpha' = [prefix, A-1, 1, reverse(middle), 1, B-1, suffix].
struct NumeratorDifferenceReport {
  BigInt numerator_before;
  BigInt numerator_after;
  BigInt difference;
  BigInt predicted;
  bool holds() const { return difference == predicted; }
};

/// Any of prefix, middle, suffix may be empty. Throws DomainError if A or B
/// is below 2 or an entry is zero.
NumeratorDifferenceReport verify_numerator_difference(
    std::span<const Entry> prefix, Entry a_entry, std::span<const Entry> middle,
    Entry b_entry, std::span<const Entry> suffix);

/// For each rotation of g(w) that starts with 2, the pair
/// (i, j) = (leading 1-run / 2 + 1, trailing 1-run / 2 + 1), in rotation order.
std::vector<std::pair<int, int>> shift_profile(const PathWord& word);

/// Every pair satisfies i < a, j < b or i < b, j < a.
bool profile_dominated(std::span<const std::pair<int, int>> profile, int a,
                       int b);

enum class RelationClass { kMupLup, kMupLdown, kMupLeq, kMeqLup, kMeqLeq };

inline constexpr std::array<RelationClass, 5> kAllRelationClasses{
    RelationClass::kMupLup, RelationClass::kMupLdown, RelationClass::kMupLeq,
    RelationClass::kMeqLup, RelationClass::kMeqLeq};

std::string_view relation_tag(RelationClass c);   // "MupLdown"
std::string_view relation_text(RelationClass c);  // "w <_M w' and w' <_L w"

/// Pair oriented so that (M, L, word) of `first` is <= that of `second`.
struct Classification {
  OrderedEntry first;
  OrderedEntry second;
  bool swapped = false;
  RelationClass relation = RelationClass::kMeqLeq;
};

Classification classify_pair(const PathWord& w1, const PathWord& w2);
Classification classify_entries(const OrderedEntry& e1, const OrderedEntry& e2);

struct ClassScan {
  int a = 0;
  int b = 0;
  std::size_t path_count = 0;
  std::uint64_t pair_count = 0;
  std::array<std::uint64_t, 5> counts{};
  /// First pair in lexicographic scan order for each class.
  std::array<std::optional<std::pair<PathWord, PathWord>>, 5> examples;
};

/// Classifies every unordered pair of distinct paths in the below-diagonal set.
ClassScan scan_classes(int a, int b, std::uint64_t max_paths = kDefaultMaxPaths,
                       unsigned jobs = 1);

/// Paths sharing one value of the chosen order.
struct ValueClass {
  std::vector<OrderedEntry> members;
};

/// Value classes sorted ascending. Both orders are total preorders, so the
/// covering structure is this chain.
struct ValueChain {
  int a = 0;
  int b = 0;
  OrderKind order = OrderKind::kMatching;
  std::vector<ValueClass> classes;
};

ValueChain hasse_chain(int a, int b, OrderKind order,
                       std::uint64_t max_paths = kDefaultMaxPaths,
                       unsigned jobs = 1);

/// Graphviz digraph of the chain, bottom to top, labelled "value-chain".
std::string chain_to_dot(const ValueChain& chain, int digits);

struct SupRow {
  int n = 0;
  LagrangeValue value;  // L(R^(n+1) U^n)
  Rational bound;       // 5 * 2^(1 - 2n)
  bool lower_ok = false;   // 1 + sqrt5 - bound < L
  bool upper_ok = false;   // L < 1 + sqrt5
  bool increasing = false; // L above the previous row (true for n = 1)
  bool holds() const { return lower_ok && upper_ok && increasing; }
};

std::vector<SupRow> sup_convergence_table(int n_max);

}  // namespace lagpath
