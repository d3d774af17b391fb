#include "lagpath/quadratic.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "lagpath/error.hpp"

namespace lagpath {
namespace {

int sign(const BigInt& v) { return v.sign(); }

int sign_of_cmp(const BigInt& l, const BigInt& r) {
  return l < r ? -1 : (l > r ? 1 : 0);
}

// sign(p + q*sqrt(d)) for d >= 0.
int sign_with_root(const BigInt& p, const BigInt& q, const BigInt& d) {
  const int sp = sign(p);
  const int sq = d == 0 ? 0 : sign(q);
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  const int c = sign_of_cmp(p * p, q * q * d);
  return c > 0 ? sp : (c < 0 ? sq : 0);
}

// sign(p + q*sqrt(d1) + r*sqrt(d2)) for d1, d2 >= 0; squares at most twice.
int sign_with_two_roots(const BigInt& p, const BigInt& q, const BigInt& d1,
                        const BigInt& r, const BigInt& d2) {
  if (d1 == d2) return sign_with_root(p, q + r, d1);
  if (q == 0 || d1 == 0) return sign_with_root(p, r, d2);
  if (r == 0 || d2 == 0) return sign_with_root(p, q, d1);
  // t = q sqrt(d1) + r sqrt(d2)
  int st;
  if (sign(q) == sign(r)) {
    st = sign(q);
  } else {
    const int c = sign_of_cmp(q * q * d1, r * r * d2);
    st = c > 0 ? sign(q) : (c < 0 ? sign(r) : 0);
  }
  const int sp = sign(p);
  if (st == 0) return sp;
  if (sp == 0 || sp == st) return st;
  // Opposite signs: compare p^2 with t^2 = q^2 d1 + r^2 d2 + 2qr sqrt(d1 d2).
  const int c = sign_with_root(p * p - q * q * d1 - r * r * d2, -2 * q * r,
                               d1 * d2);
  return c > 0 ? sp : (c < 0 ? st : 0);
}

const BigInt& joint_disc(const Surd& l, const Surd& r) {
  if (l.is_rational()) return r.disc();
  if (r.is_rational() || l.disc() == r.disc()) return l.disc();
  throw DomainError("surd arithmetic over different radicands: " + l.str() +
                    " and " + r.str());
}

Mat2 period_matrix(const PeriodicCF& period) {
  return cf_matrix(period.period());
}

}  // namespace

Surd::Surd(BigInt x, BigInt y, BigInt z, BigInt disc)
    : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)),
      disc_(std::move(disc)) {
  if (z_ == 0) throw ArithmeticError("surd with zero denominator");
  if (disc_ < 0) throw DomainError("surd with negative radicand");
  if (z_ < 0) {
    x_ = -x_;
    y_ = -y_;
    z_ = -z_;
  }
  BigInt root;
  if (y_ != 0 && disc_ != 0 && is_perfect_square(disc_, &root)) {
    x_ += y_ * root;
    y_ = 0;
  }
  if (y_ == 0 || disc_ == 0) {
    y_ = 0;
    disc_ = 0;
  }
  const BigInt g = gcd(gcd(abs(x_), abs(y_)), z_);
  if (g > 1) {
    x_ /= g;
    y_ /= g;
    z_ /= g;
  }
}

Surd Surd::rational(const Rational& r) {
  return rational(boost::multiprecision::numerator(r),
                  boost::multiprecision::denominator(r));
}

Surd Surd::inverse() const {
  const BigInt norm = x_ * x_ - y_ * y_ * disc_;
  if (norm == 0) throw ArithmeticError("inverse of zero surd");
  return Surd(z_ * x_, -z_ * y_, norm, disc_);
}

std::string Surd::str() const {
  std::string out;
  if (y_ == 0) {
    out = x_.str();
  } else {
    std::string radical = "sqrt(" + disc_.str() + ")";
    if (y_ == -1) {
      radical = "-" + radical;
    } else if (y_ != 1) {
      radical = y_.str() + "*" + radical;
    }
    if (x_ == 0) {
      out = radical;
    } else {
      out = x_.str() + (y_ > 0 ? "+" : "") + radical;
    }
  }
  if (z_ == 1) return out;
  if (y_ != 0 && x_ != 0) out = "(" + out + ")";
  return out + "/" + z_.str();
}

Surd operator-(const Surd& s) { return Surd(-s.x_, -s.y_, s.z_, s.disc_); }

Surd operator+(const Surd& l, const Surd& r) {
  const BigInt& d = joint_disc(l, r);
  return Surd(l.x_ * r.z_ + r.x_ * l.z_, l.y_ * r.z_ + r.y_ * l.z_,
              l.z_ * r.z_, d);
}

Surd operator-(const Surd& l, const Surd& r) { return l + (-r); }

Surd operator*(const Surd& l, const Surd& r) {
  const BigInt& d = joint_disc(l, r);
  return Surd(l.x_ * r.x_ + l.y_ * r.y_ * d, l.x_ * r.y_ + l.y_ * r.x_,
              l.z_ * r.z_, d);
}

Surd operator/(const Surd& l, const Surd& r) { return l * r.inverse(); }

std::strong_ordering operator<=>(const Surd& l, const Surd& r) {
  // sign of l - r scaled by the positive l.z * r.z
  const int s = sign_with_two_roots(l.x_ * r.z_ - r.x_ * l.z_, l.y_ * r.z_,
                                    l.disc_, -(r.y_ * l.z_), r.disc_);
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater
                        : std::strong_ordering::equal);
}

std::strong_ordering lagrange_cmp(const LagrangeValue& l1,
                                  const LagrangeValue& l2) {
  return compare(l1.disc * l2.q * l2.q, l2.disc * l1.q * l1.q);
}

Surd eval_purely_periodic(const PeriodicCF& period) {
  const Mat2 m = period_matrix(period);
  const BigInt trace = m.trace();
  return Surd(m.p - m.q_prev, 1, 2 * m.q, trace * trace - 4 * m.det());
}

Surd shift_contribution(const PeriodicCF& period, std::size_t k) {
  const std::size_t n = period.size();
  if (k >= n) throw DomainError("shift index outside the period");
  const Surd forward = eval_purely_periodic(period.rotated(k + 1)).inverse();
  const Surd backward =
      eval_purely_periodic(period.reversed_from(k + n - 1)).inverse();
  return Surd::rational(BigInt(period.at(k))) + forward + backward;
}

Surd direct_lagrange(const PeriodicCF& period) {
  std::optional<Surd> best;
  for (std::size_t k = 0; k < period.size(); ++k) {
    Surd c = shift_contribution(period, k);
    if (!best || c > *best) best = std::move(c);
  }
  return *best;
}

LagrangeValue lagrange_of_period(const PeriodicCF& period,
                                 LagrangeRoute route) {
  const Mat2 full = period_matrix(period);
  const BigInt trace = full.trace();
  const BigInt det = full.det();
  LagrangeValue out{trace * trace - 4 * det, 0};

  if (route == LagrangeRoute::kDirect) {
    const Surd best = direct_lagrange(period);
    if (best.x() != 0 || best.y() <= 0 || best.disc() != out.disc) {
      throw std::logic_error("direct Lagrange maximum " + best.str() +
                             " is not a multiple of sqrt(" + out.disc.str() +
                             ")");
    }
    if (best.z() % best.y() == 0) {
      out.q = best.z() / best.y();
    } else {
      out.disc *= best.y() * best.y();
      out.q = best.z();
    }
    return out;
  }

  const auto period_entries = period.period();
  const bool has_two = std::ranges::find(period_entries, Entry{2}) !=
                       period_entries.end();
  std::optional<BigInt> smallest;
  for (std::size_t k = 0; k < period.size(); ++k) {
    const Mat2 m = period_matrix(period.rotated(k));
    if (m.trace() != trace || m.det() != det) {
      throw std::logic_error("period matrix trace/determinant changed under rotation");
    }
    if (has_two && period.at(k) != 2) continue;
    if (!smallest || m.q < *smallest) smallest = m.q;
  }
  out.q = *smallest;
  return out;
}

LagrangeValue lagrange_number(const PathWord& word, LagrangeRoute route) {
  return lagrange_of_period(g_period(word), route);
}

SplitCheck check_split_at_two(const PeriodicCF& period) {
  const Surd five_halves = Surd::rational(5, 2);
  const Surd one_plus_root3(1, 1, 1, 3);
  SplitCheck out;
  for (std::size_t k = 0; k < period.size(); ++k) {
    const Surd c = shift_contribution(period, k);
    if (period.at(k) == 1 && !(c < five_halves)) {
      out.ones_below_five_halves = false;
    }
    if (period.at(k) == 2 && c < one_plus_root3) {
      out.twos_at_least_one_plus_root3 = false;
    }
  }
  return out;
}

CornerBoundCheck bounds_check_L_max(int a, int b) {
  if (b < 1 || a <= b) {
    throw DomainError("bounds_check_L_max: requires a > b >= 1");
  }
  const auto power_of_two = [](int e) {
    return e >= 0 ? Rational(pow2(static_cast<unsigned>(e)))
                  : Rational(BigInt(1), pow2(static_cast<unsigned>(-e)));
  };
  CornerBoundCheck out{lagrange_number(corner_path(a, b)), Surd(1, 1, 1, 5),
                       Surd(1, 1, 1, 5)};
  out.lower = out.upper - Surd::rational(power_of_two(3 - 2 * a) +
                                         power_of_two(3 - 2 * b));
  const Surd value = out.value.to_surd();
  out.lower_ok = out.lower < value;
  out.upper_ok = value < out.upper;
  return out;
}

namespace {

BigInt floor_div(const BigInt& numer, const BigInt& denom) {
  BigInt q = numer / denom;
  if (numer % denom != 0 && ((numer < 0) != (denom < 0))) q -= 1;
  return q;
}

// floor(value * scale + 1/2), exact.
BigInt rounded_scaled(const Surd& value, const BigInt& scale) {
  // (A + B sqrt(disc)) / C with C > 0
  const BigInt a = 2 * value.x() * scale + value.z();
  const BigInt b = 2 * value.y() * scale;
  const BigInt c = 2 * value.z();
  BigInt floor_root_part = 0;  // floor(b * sqrt(disc))
  if (b != 0) {
    BigInt root;
    const bool exact = is_perfect_square(b * b * value.disc(), &root);
    floor_root_part = b > 0 ? root : -(root + (exact ? 0 : 1));
  }
  // floor((a + s)/c) = floor((a + floor(s))/c) for integer a and c > 0
  return floor_div(a + floor_root_part, c);
}

std::string format_fixed(const BigInt& scaled, int digits) {
  std::string magnitude = BigInt(abs(scaled)).str();
  const auto width = static_cast<std::size_t>(digits) + 1;
  if (magnitude.size() < width) {
    magnitude.insert(0, width - magnitude.size(), '0');
  }
  magnitude.insert(magnitude.size() - static_cast<std::size_t>(digits), ".");
  return scaled < 0 ? "-" + magnitude : magnitude;
}

BigInt ten_to(int digits) {
  if (digits < 1) throw DomainError("decimal_approx needs digits >= 1");
  return boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(digits));
}

}  // namespace

std::string decimal_approx(const Surd& value, int digits) {
  return format_fixed(rounded_scaled(value, ten_to(digits)), digits);
}

std::string decimal_approx_difference(const Surd& l, const Surd& r,
                                      int digits) {
  const BigInt scale = ten_to(digits);
  // Each rounded part is within 1/2 of its exact scaled value, so the answer
  // lies within two units of the guess. Pick it with exact sign tests on
  // t - n, where t = scale * (l - r) + 1/2, scaled by 2 * l.z * r.z.
  const BigInt guess = rounded_scaled(l, scale) - rounded_scaled(r, scale);
  const BigInt zz = l.z() * r.z();
  const BigInt p_base = 2 * scale * (l.x() * r.z() - r.x() * l.z()) + zz;
  const BigInt q = 2 * scale * l.y() * r.z();
  const BigInt s = -2 * scale * r.y() * l.z();
  for (BigInt n = guess + 2; n >= guess - 2; --n) {
    if (sign_with_two_roots(p_base - 2 * n * zz, q, l.disc(), s, r.disc()) >= 0) {
      return format_fixed(n, digits);
    }
  }
  throw std::logic_error("decimal_approx_difference: rounding search failed");
}

}  // namespace lagpath
