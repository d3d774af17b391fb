#include "lagpath/markov.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "lagpath/contfrac.hpp"
#include "lagpath/error.hpp"
#include "lagpath/paths.hpp"

namespace lagpath {
namespace {

MarkovTriple sorted_triple(BigInt x, BigInt y, BigInt z) {
  if (x > y) std::swap(x, y);
  if (y > z) std::swap(y, z);
  if (x > y) std::swap(x, y);
  MarkovTriple t{std::move(x), std::move(y), std::move(z)};
  if (t.x * t.x + t.y * t.y + t.z * t.z != 3 * t.x * t.y * t.z) {
    throw std::logic_error("Vieta move left the Markov surface");
  }
  return t;
}

std::array<MarkovTriple, 3> neighbours(const MarkovTriple& t) {
  return {sorted_triple(t.x, t.y, 3 * t.x * t.y - t.z),
          sorted_triple(t.x, 3 * t.x * t.z - t.y, t.z),
          sorted_triple(3 * t.y * t.z - t.x, t.y, t.z)};
}

// Breadth-first search; `keep` filters which triples enter the frontier.
template <class Keep, class Visit>
void bfs(int depth, Keep keep, Visit visit) {
  if (depth < 0) throw DomainError("tree depth must be >= 0");
  std::set<MarkovTriple> seen{MarkovTriple{1, 1, 1}};
  std::vector<MarkovTriple> frontier{MarkovTriple{1, 1, 1}};
  if (!visit(frontier.front(), seen.size())) return;
  for (int level = 0; level < depth && !frontier.empty(); ++level) {
    std::vector<MarkovTriple> next;
    for (const MarkovTriple& t : frontier) {
      for (MarkovTriple& n : neighbours(t)) {
        if (!keep(n) || seen.contains(n)) continue;
        seen.insert(n);
        if (!visit(n, seen.size())) return;
        next.push_back(std::move(n));
      }
    }
    frontier = std::move(next);
  }
}

// Orders the pair so that p > p' (or q > q' when `by_q`) and evaluates the
// inequality with exact rationals.
SlopeOrientation orient(int p, int q, int p2, int q2, const BigInt& m,
                        const BigInt& m2, bool by_q) {
  SlopeOrientation o;
  const bool swap = by_q ? q < q2 : p < p2;
  o.p = swap ? p2 : p;
  o.q = swap ? q2 : q;
  o.p2 = swap ? p : p2;
  o.q2 = swap ? q : q2;
  o.m = swap ? m2 : m;
  o.m2 = swap ? m : m2;
  o.tied = by_q ? o.q == o.q2 : o.p == o.p2;
  if (o.tied) return o;
  o.infinite = o.q == o.q2;
  if (!o.infinite) {
    // Rational wants a positive denominator.
    const int dp = o.p - o.p2;
    const int dq = o.q - o.q2;
    o.slope = dq > 0 ? Rational(dp, dq) : Rational(-dp, -dq);
  }
  // An infinite slope only arises when ordered by p, with p - p' > 0.
  const bool predicts_greater = o.infinite || o.slope >= Rational(-8, 7);
  const bool predicts_less = !o.infinite && o.slope <= Rational(-5, 4);
  if (predicts_greater) {
    o.verdict = o.m > o.m2 ? SlopeVerdict::kConfirmed : SlopeVerdict::kViolated;
  } else if (predicts_less) {
    o.verdict = o.m < o.m2 ? SlopeVerdict::kConfirmed : SlopeVerdict::kViolated;
  }
  return o;
}

}  // namespace

std::strong_ordering operator<=>(const MarkovTriple& l, const MarkovTriple& r) {
  const auto key = [](const MarkovTriple& t) {
    return std::tie(t.z, t.y, t.x);
  };
  if (key(l) < key(r)) return std::strong_ordering::less;
  if (key(r) < key(l)) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

BigInt markov_number(int a, int b) {
  return matching_number(christoffel(a, b));
}

std::vector<MarkovTriple> markov_tree(int depth, std::size_t max_triples) {
  std::vector<MarkovTriple> out;
  bfs(
      depth, [](const MarkovTriple&) { return true; },
      [&](const MarkovTriple& t, std::size_t count) {
        if (count > max_triples) {
          throw ResourceError("Markov tree exceeds " +
                              std::to_string(max_triples) + " triples");
        }
        out.push_back(t);
        return true;
      });
  std::ranges::sort(out);
  return out;
}

bool verify_markov_membership(int a, int b, int depth) {
  const BigInt m = markov_number(a, b);
  bool found = false;
  bfs(
      depth, [&](const MarkovTriple& t) { return t.z <= m; },
      [&](const MarkovTriple& t, std::size_t) {
        found = t.z == m;
        return !found;
      });
  return found;
}

MarkovIdentity lagrange_markov_identity(int a, int b) {
  MarkovIdentity id;
  const PathWord w = christoffel(a, b);
  id.m = matching_number(w);
  id.lagrange = lagrange_number(w);
  const BigInt m2 = id.m * id.m;
  id.lhs = id.lagrange.disc * m2;
  id.rhs = (9 * m2 - 4) * id.lagrange.q * id.lagrange.q;
  return id;
}

std::string_view verdict_name(SlopeVerdict v) {
  switch (v) {
    case SlopeVerdict::kConfirmed: return "confirmed";
    case SlopeVerdict::kInapplicable: return "inapplicable";
    case SlopeVerdict::kViolated: return "violated";
  }
  return "";
}

SlopeCheck slope_inequality_check(int a, int b, int a2, int b2) {
  const BigInt m = markov_number(a, b);
  const BigInt m2 = markov_number(a2, b2);
  return {orient(a, b, a2, b2, m, m2, false), orient(b, a, b2, a2, m, m2, false),
          orient(b, a, b2, a2, m, m2, true)};
}

}  // namespace lagpath
