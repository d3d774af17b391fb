#include "lagpath/contfrac.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "lagpath/error.hpp"

namespace lagpath {
namespace {

void require_positive(std::span<const Entry> entries, const char* what) {
  if (entries.empty()) throw DomainError(std::string(what) + " must be nonempty");
  if (std::ranges::find(entries, Entry{0}) != entries.end()) {
    throw DomainError(std::string(what) + " entries must be >= 1");
  }
}

// Term accessor for the comparison rule; nullopt stands for the infinite
// padding entry of a finite expansion.
class TermSource {
 public:
  explicit TermSource(const CfValue& value) {
    if (const auto* cf = std::get_if<CFSeq>(&value)) {
      terms_.assign(cf->entries().begin(), cf->entries().end());
      if (terms_.size() >= 2 && terms_.back() == 1) {
        terms_.pop_back();
        ++terms_.back();
      }
      periodic_ = false;
    } else {
      const auto& p = std::get<PeriodicCF>(value);
      terms_.assign(p.period().begin(), p.period().end());
      periodic_ = true;
    }
  }

  std::optional<Entry> term(std::size_t i) const {
    if (periodic_) return terms_[i % terms_.size()];
    if (i < terms_.size()) return terms_[i];
    return std::nullopt;
  }

  std::size_t length() const { return terms_.size(); }

 private:
  std::vector<Entry> terms_;
  bool periodic_ = false;
};

}  // namespace

CFSeq::CFSeq(std::vector<Entry> entries) : entries_(std::move(entries)) {
  require_positive(entries_, "continued fraction");
}

PeriodicCF::PeriodicCF(std::vector<Entry> period) : period_(std::move(period)) {
  require_positive(period_, "period");
}

PeriodicCF PeriodicCF::rotated(std::size_t k) const {
  std::vector<Entry> out(period_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = at(k + i);
  return PeriodicCF(std::move(out));
}

PeriodicCF PeriodicCF::reversed_from(std::size_t k) const {
  const std::size_t n = period_.size();
  std::vector<Entry> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = at(k + n - (i % n));
  return PeriodicCF(std::move(out));
}

CFSeq path_to_cf(const PathWord& word) {
  if (word.size() < 2) {
    throw DomainError("path too short for f(ω): " + word.str());
  }
  std::vector<Entry> out;
  const auto steps = word.steps();
  for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
    if (steps[i] == steps[i + 1]) {
      out.push_back(1);
      out.push_back(1);
    } else {
      out.push_back(2);
    }
  }
  return CFSeq(std::move(out));
}

std::vector<Convergent> convergents(std::span<const Entry> entries) {
  std::vector<Convergent> out;
  out.reserve(entries.size());
  BigInt p_prev2 = 0, q_prev2 = 1;  // index -2
  BigInt p_prev = 1, q_prev = 0;    // index -1
  for (Entry a : entries) {
    BigInt p = a * p_prev + p_prev2;
    BigInt q = a * q_prev + q_prev2;
    p_prev2 = std::exchange(p_prev, p);
    q_prev2 = std::exchange(q_prev, q);
    out.push_back({std::move(p), std::move(q)});
  }
  return out;
}

Mat2 cf_matrix(std::span<const Entry> entries) {
  Mat2 m = Mat2::identity();
  for (Entry a : entries) m = m * Mat2::elementary(a);
  return m;
}

BigInt numerator(const CFSeq& cf) { return cf_matrix(cf).p; }

Rational cf_rational(const CFSeq& cf) {
  const Mat2 m = cf_matrix(cf);
  return Rational(m.p, m.q);
}

BigInt matching_number(const PathWord& word) {
  return numerator(path_to_cf(word));
}

PeriodicCF g_period(const PathWord& word) {
  const CFSeq f = path_to_cf(word);
  std::vector<Entry> period{2};
  period.insert(period.end(), f.entries().begin(), f.entries().end());
  return PeriodicCF(std::move(period));
}

BigInt fibonacci(unsigned t) {
  BigInt prev = 0, cur = 1;
  if (t == 0) return prev;
  for (unsigned i = 1; i < t; ++i) prev = std::exchange(cur, cur + prev);
  return cur;
}

FibIdentityCheck check_fib_identities(unsigned s, unsigned t) {
  if (s < 1 || t < 1) throw DomainError("fibonacci identities need s, t >= 1");
  const auto ones = [](unsigned n) { return std::vector<Entry>(n, 1); };
  const auto F = [](unsigned n) { return fibonacci(n); };

  FibIdentityCheck out;
  out.all_ones = cf_rational(CFSeq(ones(t))) == Rational(F(t + 1), F(t));

  std::vector<Entry> two_ones{2};
  for (Entry e : ones(t)) two_ones.push_back(e);
  out.two_then_ones =
      cf_rational(CFSeq(two_ones)) == Rational(F(t + 3), F(t + 1));

  std::vector<Entry> mixed = ones(s);
  mixed.push_back(2);
  for (Entry e : ones(t)) mixed.push_back(e);
  const BigInt num = F(s + 1) * F(t + 3) + F(s) * F(t + 1);
  const BigInt den = F(s) * F(t + 3) + F(s - 1) * F(t + 1);
  out.ones_two_ones = cf_rational(CFSeq(mixed)) == Rational(num, den);
  return out;
}

std::strong_ordering compare_cf(const CfValue& x, const CfValue& y) {
  const TermSource xs(x);
  const TermSource ys(y);
  // Two periodic words that agree on len(x) + len(y) terms agree forever
  // (Fine and Wilf); a finite word differs from anything by index len + 1.
  const std::size_t limit = xs.length() + ys.length() + 1;
  for (std::size_t k = 0; k < limit; ++k) {
    const auto xk = xs.term(k);
    const auto yk = ys.term(k);
    if (xk == yk) {
      if (!xk) return std::strong_ordering::equal;
      continue;
    }
    // nullopt is the infinite entry, larger than every integer.
    const bool x_term_smaller = xk && (!yk || *xk < *yk);
    const bool even = k % 2 == 0;
    return (x_term_smaller == even) ? std::strong_ordering::less
                                    : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Rational gap_bound(int k) {
  if (k < 1) throw DomainError("gap_bound needs k >= 1");
  if (k == 1) return Rational(2);
  return Rational(BigInt(1), pow2(static_cast<unsigned>(k - 2)));
}

}  // namespace lagpath
