#include "lagpath/orders.hpp"

#include <algorithm>
#include <sstream>

#include "lagpath/error.hpp"
#include "lagpath/parallel.hpp"

namespace lagpath {
namespace {

// f restricted to the adjacent pairs of a step sequence; empty for length < 2.
std::vector<Entry> pair_entries(std::span<const Step> steps) {
  std::vector<Entry> out;
  for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
    if (steps[i] == steps[i + 1]) {
      out.insert(out.end(), {1, 1});
    } else {
      out.push_back(2);
    }
  }
  return out;
}

std::vector<Entry> window_entries(int u, int r) {
  std::vector<Entry> out{2};
  out.insert(out.end(), static_cast<std::size_t>(2 * u - 2), 1);
  out.push_back(2);
  out.insert(out.end(), static_cast<std::size_t>(2 * r - 2), 1);
  out.push_back(2);
  return out;
}

std::vector<OrderedEntry> below_diagonal_entries(int a, int b,
                                                 std::uint64_t max_paths,
                                                 unsigned jobs) {
  const std::vector<PathWord> words = enumerate_below_diagonal(a, b, max_paths);
  return make_entries(words, jobs);
}

std::strong_ordering full_order(const OrderedEntry& l, const OrderedEntry& r) {
  if (auto c = compare(l.matching, r.matching); c != 0) return c;
  if (auto c = lagrange_cmp(l.lagrange, r.lagrange); c != 0) return c;
  return l.path <=> r.path;
}

}  // namespace

std::string_view order_name(OrderKind order) {
  return order == OrderKind::kMatching ? "M" : "L";
}

OrderedEntry make_entry(const PathWord& word, LagrangeRoute route) {
  return {word, matching_number(word), lagrange_number(word, route)};
}

std::vector<OrderedEntry> make_entries(std::span<const PathWord> words,
                                       unsigned jobs, LagrangeRoute route) {
  return ordered_parallel_map(
      words, jobs, [route](const PathWord& w) { return make_entry(w, route); });
}

std::strong_ordering cmp_M(const PathWord& w1, const PathWord& w2) {
  return compare(matching_number(w1), matching_number(w2));
}

std::strong_ordering cmp_L(const PathWord& w1, const PathWord& w2) {
  return lagrange_cmp(lagrange_number(w1), lagrange_number(w2));
}

std::strong_ordering compare_entries(const OrderedEntry& e1,
                                     const OrderedEntry& e2, OrderKind order) {
  if (order == OrderKind::kLagrange) {
    return lagrange_cmp(e1.lagrange, e2.lagrange);
  }
  return compare(e1.matching, e2.matching);
}

UniqueMaxReport verify_unique_max(int a, int b, std::uint64_t max_paths,
                                  unsigned jobs) {
  const std::vector<OrderedEntry> entries =
      below_diagonal_entries(a, b, max_paths, jobs);
  const PathWord corner = corner_path(a, b);
  const auto it = std::ranges::find_if(
      entries, [&](const OrderedEntry& e) { return e.path == corner; });
  if (it == entries.end()) {
    throw std::logic_error("corner path missing from the enumeration");
  }
  UniqueMaxReport report{a, b, entries.size(), *it};
  report.unique_under_matching = true;
  report.unique_under_lagrange = true;
  for (const OrderedEntry& e : entries) {
    if (e.path == corner) continue;
    if (!report.runner_up_matching ||
        compare_entries(e, *report.runner_up_matching, OrderKind::kMatching) > 0) {
      report.runner_up_matching = e;
    }
    if (!report.runner_up_lagrange ||
        compare_entries(e, *report.runner_up_lagrange, OrderKind::kLagrange) > 0) {
      report.runner_up_lagrange = e;
    }
    if (compare_entries(e, report.maximum, OrderKind::kMatching) >= 0) {
      report.unique_under_matching = false;
    }
    if (compare_entries(e, report.maximum, OrderKind::kLagrange) >= 0) {
      report.unique_under_lagrange = false;
    }
  }
  return report;
}

std::vector<std::size_t> exchange_positions(const PathWord& word) {
  const std::vector<Block> bl = blocks(word);
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i + 2 < bl.size(); ++i) {
    if (bl[i].letter == Step::U) out.push_back(i);
  }
  return out;
}

ExchangeReport verify_exchange_identity(const PathWord& word,
                                        std::size_t block_index) {
  ExchangeReport rep{word, exchange_move(word, block_index), block_index};
  const std::vector<Block> bl = blocks(word);
  rep.u = bl[block_index].run;
  rep.r = bl[block_index + 1].run;

  std::size_t start = 0;
  for (std::size_t i = 0; i < block_index; ++i) {
    start += static_cast<std::size_t>(bl[i].run);
  }
  const auto steps = word.steps();
  const auto prefix_with_r = steps.subspan(0, start);  // [S1] R
  const std::size_t tail = start + static_cast<std::size_t>(rep.u + rep.r);
  const auto u_with_suffix = steps.subspan(tail);     // U [S2]
  for (std::size_t i = 0; i + 1 < start; ++i) {
    rep.prefix.push_back(static_cast<char>(steps[i]));
  }

  const std::vector<Entry> prefix = pair_entries(prefix_with_r);
  const std::vector<Entry> suffix = pair_entries(u_with_suffix);
  std::vector<Entry> expected_f = prefix;
  for (Entry e : window_entries(rep.u, rep.r)) expected_f.push_back(e);
  expected_f.insert(expected_f.end(), suffix.begin(), suffix.end());
  const CFSeq f = path_to_cf(word);
  if (!std::ranges::equal(f.entries(), expected_f)) {
    throw ShapeError("f(" + word.str() + ") does not split around block " +
                     std::to_string(block_index));
  }

  const Mat2 p = cf_matrix(prefix);
  const Mat2 s = cf_matrix(suffix);
  const std::vector<Entry> window = window_entries(rep.u, rep.r);
  const Mat2 middle = cf_matrix(std::span<const Entry>(window).subspan(
      1, window.size() - 2));

  rep.m_before = matching_number(rep.before);
  rep.m_after = matching_number(rep.after);
  rep.difference = rep.m_after - rep.m_before;
  const BigInt fib_factor = 2 * fibonacci(static_cast<unsigned>(2 * rep.u)) *
                            fibonacci(static_cast<unsigned>(2 * rep.r));
  rep.predicted =
      fib_factor * (p.p * s.q + p.p_prev * s.p + p.p_prev * s.q);
  rep.middle_factor = middle.p_prev + middle.q + middle.q_prev;
  rep.identity_holds = rep.difference == rep.predicted;
  rep.middle_factor_matches = rep.middle_factor == fib_factor;
  rep.strict = rep.difference > 0;
  rep.equality_clause_ok =
      rep.difference != 0 || rep.prefix.empty() || rep.prefix == "U";
  return rep;
}

NumeratorDifferenceReport verify_numerator_difference(
    std::span<const Entry> prefix, Entry a_entry, std::span<const Entry> middle,
    Entry b_entry, std::span<const Entry> suffix) {
  if (a_entry < 2 || b_entry < 2) {
    throw DomainError("numerator difference needs A, B >= 2");
  }
  std::vector<Entry> before(prefix.begin(), prefix.end());
  before.push_back(a_entry);
  before.insert(before.end(), middle.begin(), middle.end());
  before.push_back(b_entry);
  before.insert(before.end(), suffix.begin(), suffix.end());

  std::vector<Entry> after(prefix.begin(), prefix.end());
  after.insert(after.end(), {a_entry - 1, 1});
  after.insert(after.end(), middle.rbegin(), middle.rend());
  after.insert(after.end(), {1, b_entry - 1});
  after.insert(after.end(), suffix.begin(), suffix.end());

  NumeratorDifferenceReport rep;
  rep.numerator_before = numerator(CFSeq(std::move(before)));
  rep.numerator_after = numerator(CFSeq(std::move(after)));
  rep.difference = rep.numerator_after - rep.numerator_before;

  // Validates entries of the possibly empty parts as a side effect.
  for (auto part : {prefix, middle, suffix}) {
    if (std::ranges::find(part, Entry{0}) != part.end()) {
      throw DomainError("continued fraction entries must be >= 1");
    }
  }
  const Mat2 p = cf_matrix(prefix);
  const Mat2 c = cf_matrix(middle);
  const Mat2 s = cf_matrix(suffix);
  const BigInt A(a_entry);
  const BigInt B(b_entry);
  rep.predicted = (c.p_prev + c.q + c.q_prev) *
                  (p.p * s.p * (A * B - A - B) + p.p * s.q * (A - 1) +
                   p.p_prev * s.p * (B - 1) + p.p_prev * s.q);
  return rep;
}

std::vector<std::pair<int, int>> shift_profile(const PathWord& word) {
  const PeriodicCF g = g_period(word);
  const std::size_t n = g.size();
  std::vector<std::pair<int, int>> out;
  for (std::size_t k = 0; k < n; ++k) {
    if (g.at(k) != 2) continue;
    std::size_t leading = 0;
    while (leading + 1 < n && g.at(k + 1 + leading) == 1) ++leading;
    std::size_t trailing = 0;
    if (leading + 1 < n) {
      while (trailing + leading + 1 < n && g.at(k + n - 1 - trailing) == 1) {
        ++trailing;
      }
    }
    out.emplace_back(static_cast<int>(leading / 2) + 1,
                     static_cast<int>(trailing / 2) + 1);
  }
  return out;
}

bool profile_dominated(std::span<const std::pair<int, int>> profile, int a,
                       int b) {
  return std::ranges::all_of(profile, [&](const auto& ij) {
    const auto [i, j] = ij;
    return (i < a && j < b) || (i < b && j < a);
  });
}

std::string_view relation_tag(RelationClass c) {
  switch (c) {
    case RelationClass::kMupLup: return "MupLup";
    case RelationClass::kMupLdown: return "MupLdown";
    case RelationClass::kMupLeq: return "MupLeq";
    case RelationClass::kMeqLup: return "MeqLup";
    case RelationClass::kMeqLeq: return "MeqLeq";
  }
  return "";
}

std::string_view relation_text(RelationClass c) {
  switch (c) {
    case RelationClass::kMupLup: return "w <_M w' and w <_L w'";
    case RelationClass::kMupLdown: return "w <_M w' and w' <_L w";
    case RelationClass::kMupLeq: return "w <_M w' and L(w) = L(w')";
    case RelationClass::kMeqLup: return "M(w) = M(w') and w <_L w'";
    case RelationClass::kMeqLeq: return "M(w) = M(w') and L(w) = L(w')";
  }
  return "";
}

Classification classify_entries(const OrderedEntry& e1, const OrderedEntry& e2) {
  const bool swap = full_order(e1, e2) > 0;
  Classification out{swap ? e2 : e1, swap ? e1 : e2, swap};
  const auto m = compare_entries(out.first, out.second, OrderKind::kMatching);
  const auto l = compare_entries(out.first, out.second, OrderKind::kLagrange);
  if (m == 0) {
    // Orientation puts the smaller L first when M ties.
    out.relation = l == 0 ? RelationClass::kMeqLeq : RelationClass::kMeqLup;
  } else if (l < 0) {
    out.relation = RelationClass::kMupLup;
  } else if (l > 0) {
    out.relation = RelationClass::kMupLdown;
  } else {
    out.relation = RelationClass::kMupLeq;
  }
  return out;
}

Classification classify_pair(const PathWord& w1, const PathWord& w2) {
  return classify_entries(make_entry(w1), make_entry(w2));
}

ClassScan scan_classes(int a, int b, std::uint64_t max_paths, unsigned jobs) {
  const std::vector<OrderedEntry> entries =
      below_diagonal_entries(a, b, max_paths, jobs);
  ClassScan scan{a, b, entries.size()};
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      const Classification c = classify_entries(entries[i], entries[j]);
      const auto idx = static_cast<std::size_t>(c.relation);
      ++scan.counts[idx];
      ++scan.pair_count;
      if (!scan.examples[idx]) {
        scan.examples[idx].emplace(c.first.path, c.second.path);
      }
    }
  }
  return scan;
}

ValueChain hasse_chain(int a, int b, OrderKind order, std::uint64_t max_paths,
                       unsigned jobs) {
  std::vector<OrderedEntry> entries =
      below_diagonal_entries(a, b, max_paths, jobs);
  std::ranges::stable_sort(entries, [order](const auto& l, const auto& r) {
    return compare_entries(l, r, order) < 0;
  });
  ValueChain chain{a, b, order};
  for (OrderedEntry& e : entries) {
    if (chain.classes.empty() ||
        compare_entries(chain.classes.back().members.front(), e, order) != 0) {
      chain.classes.emplace_back();
    }
    chain.classes.back().members.push_back(std::move(e));
  }
  return chain;
}

std::string chain_to_dot(const ValueChain& chain, int digits) {
  std::ostringstream out;
  const std::string_view name = order_name(chain.order);
  out << "digraph value_chain {\n";
  out << "  label=\"value-chain of D(" << chain.a << "," << chain.b
      << ") under <_" << name << "\";\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";
  for (std::size_t i = 0; i < chain.classes.size(); ++i) {
    const OrderedEntry& rep = chain.classes[i].members.front();
    out << "  c" << i << " [label=\"";
    if (chain.order == OrderKind::kMatching) {
      out << "M=" << rep.matching.str();
    } else {
      out << "L=sqrt(" << rep.lagrange.disc.str() << ")/"
          << rep.lagrange.q.str() << " ~ "
          << decimal_approx(rep.lagrange, digits);
    }
    for (const OrderedEntry& m : chain.classes[i].members) {
      out << "\\n" << m.path.str();
    }
    out << "\"];\n";
  }
  for (std::size_t i = 0; i + 1 < chain.classes.size(); ++i) {
    out << "  c" << i << " -> c" << (i + 1) << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::vector<SupRow> sup_convergence_table(int n_max) {
  if (n_max < 1) throw DomainError("sup_convergence_table needs n_max >= 1");
  const Surd one_plus_root5(1, 1, 1, 5);
  std::vector<SupRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    SupRow row;
    row.n = n;
    row.value = lagrange_number(corner_path(n + 1, n));
    row.bound = Rational(BigInt(5) * 2, pow2(static_cast<unsigned>(2 * n)));
    const Surd value = row.value.to_surd();
    row.lower_ok = one_plus_root5 - Surd::rational(row.bound) < value;
    row.upper_ok = value < one_plus_root5;
    row.increasing =
        rows.empty() || lagrange_cmp(rows.back().value, row.value) < 0;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace lagpath
