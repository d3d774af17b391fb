#include "lagpath/report.hpp"

#include <sstream>

#include <json.hpp>

#include "lagpath/contfrac.hpp"
#include "lagpath/error.hpp"
#include "lagpath/markov.hpp"
#include "lagpath/snake.hpp"

namespace lagpath {
namespace {

using Json = nlohmann::ordered_json;

std::string dec(const BigInt& v) { return v.str(); }

std::string rational_text(const Rational& r) {
  const BigInt num = numerator(r);
  const BigInt den = denominator(r);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

Json entries_json(std::span<const Entry> entries) {
  Json out = Json::array();
  for (Entry e : entries) out.push_back(e);
  return out;
}

Json lagrange_json(const LagrangeValue& l, int digits) {
  return Json{{"disc", dec(l.disc)},
              {"q", dec(l.q)},
              {"approx", decimal_approx(l, digits)}};
}

Json entry_json(const OrderedEntry& e, int digits) {
  return Json{{"word", e.path.str()},
              {"M", dec(e.matching)},
              {"L", lagrange_json(e.lagrange, digits)}};
}

// CSV cell: quoted only when needed.
std::string csv_cell(const Json& v) {
  std::string s;
  if (v.is_string()) {
    s = v.get<std::string>();
  } else if (v.is_null()) {
    s = "";
  } else {
    s = v.dump();
  }
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

void flatten(const Json& v, const std::string& prefix, Json& out) {
  if (v.is_object()) {
    for (const auto& [k, child] : v.items()) {
      flatten(child, prefix.empty() ? k : prefix + "." + k, out);
    }
  } else if (v.is_array() &&
             std::ranges::all_of(v, [](const Json& e) { return e.is_number(); })) {
    std::string joined;
    for (const Json& e : v) joined += (joined.empty() ? "" : " ") + e.dump();
    out[prefix] = joined;
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      flatten(v[i], prefix + "." + std::to_string(i), out);
    }
  } else {
    out[prefix] = v;
  }
}

// Arrays of objects become one row per element; anything else one row.
std::string to_csv(const Json& v) {
  std::vector<Json> rows;
  if (v.is_array()) {
    for (const Json& e : v) {
      Json flat = Json::object();
      flatten(e, "", flat);
      rows.push_back(std::move(flat));
    }
  } else {
    Json flat = Json::object();
    flatten(v, "", flat);
    rows.push_back(std::move(flat));
  }
  std::ostringstream out;
  if (rows.empty()) return "";
  bool first = true;
  for (const auto& [k, unused] : rows.front().items()) {
    out << (first ? "" : ",") << csv_cell(k);
    first = false;
  }
  out << "\n";
  for (const Json& row : rows) {
    first = true;
    for (const auto& [k, unused] : rows.front().items()) {
      out << (first ? "" : ",") << csv_cell(row.contains(k) ? row[k] : Json());
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

Report render(const Json& v, const ReportOptions& opt, bool verified = true) {
  if (opt.format == Format::kCsv) return {to_csv(v), verified};
  return {v.dump() + "\n", verified};
}

void check_digits(const ReportOptions& opt) {
  if (opt.digits < 1) throw DomainError("digits must be >= 1");
}

Json uniq_json(const UniqueMaxReport& r, int digits) {
  const auto runner = [&](const std::optional<OrderedEntry>& e) {
    return e ? entry_json(*e, digits) : Json();
  };
  return Json{{"a", r.a},
              {"b", r.b},
              {"paths", r.path_count},
              {"max", entry_json(r.maximum, digits)},
              {"runner_up_M", runner(r.runner_up_matching)},
              {"runner_up_L", runner(r.runner_up_lagrange)},
              {"unique_M", r.unique_under_matching},
              {"unique_L", r.unique_under_lagrange},
              {"verified", r.holds()}};
}

Json exchange_json(const ExchangeReport& r) {
  return Json{{"word", r.before.str()},
              {"block", r.block_index},
              {"u", r.u},
              {"r", r.r},
              {"result", r.after.str()},
              {"prefix", r.prefix},
              {"M_before", dec(r.m_before)},
              {"M_after", dec(r.m_after)},
              {"difference", dec(r.difference)},
              {"predicted", dec(r.predicted)},
              {"middle_factor", dec(r.middle_factor)},
              {"strict", r.strict},
              {"verified", r.holds()}};
}

Json slope_json(const SlopeOrientation& o) {
  Json j{{"p", o.p}, {"q", o.q}, {"p2", o.p2}, {"q2", o.q2}};
  if (o.tied) {
    j["slope"] = nullptr;
  } else {
    j["slope"] = o.infinite ? "inf" : rational_text(o.slope);
  }
  j["m"] = dec(o.m);
  j["m2"] = dec(o.m2);
  j["verdict"] = verdict_name(o.verdict);
  return j;
}

}  // namespace

Report path_report(const PathWord& word, const ReportOptions& opt) {
  check_digits(opt);
  const CFSeq f = path_to_cf(word);
  const PeriodicCF g = g_period(word);
  const LagrangeValue l = lagrange_number(word, opt.route);
  Json j{{"word", word.str()},
         {"a", word.rights()},
         {"b", word.ups()},
         {"below_diagonal", is_below_diagonal(word)},
         {"blocks", blocks(word).size()},
         {"f", entries_json(f.entries())},
         {"g", entries_json(g.period())},
         {"M", dec(numerator(f))},
         {"L", lagrange_json(l, opt.digits)}};
  return render(j, opt);
}

Report enumerate_report(int a, int b, const ReportOptions& opt) {
  check_digits(opt);
  const std::vector<PathWord> words =
      enumerate_below_diagonal(a, b, opt.max_paths);
  const std::vector<OrderedEntry> entries =
      make_entries(words, opt.jobs, opt.route);
  std::ostringstream out;
  if (opt.format == Format::kCsv) {
    out << "word,a,b,M,disc,q,L_approx\n";
    for (const OrderedEntry& e : entries) {
      out << e.path.str() << ',' << a << ',' << b << ',' << dec(e.matching)
          << ',' << dec(e.lagrange.disc) << ',' << dec(e.lagrange.q) << ','
          << decimal_approx(e.lagrange, opt.digits) << '\n';
    }
  } else {
    for (const OrderedEntry& e : entries) {
      Json j{{"word", e.path.str()}, {"a", a}, {"b", b}};
      j["M"] = dec(e.matching);
      j["L"] = lagrange_json(e.lagrange, opt.digits);
      out << j.dump() << '\n';
    }
  }
  return {out.str(), true};
}

Report verify_max_report(int a, int b, const ReportOptions& opt) {
  check_digits(opt);
  const UniqueMaxReport r = verify_unique_max(a, b, opt.max_paths, opt.jobs);
  return render(uniq_json(r, opt.digits), opt, r.holds());
}

Report hasse_report(int a, int b, OrderKind order, bool dot,
                    const ReportOptions& opt) {
  check_digits(opt);
  const ValueChain chain = hasse_chain(a, b, order, opt.max_paths, opt.jobs);
  if (dot) return {chain_to_dot(chain, opt.digits), true};
  Json classes = Json::array();
  for (std::size_t i = 0; i < chain.classes.size(); ++i) {
    const OrderedEntry& rep = chain.classes[i].members.front();
    Json members = Json::array();
    for (const OrderedEntry& m : chain.classes[i].members) {
      members.push_back(m.path.str());
    }
    Json c{{"rank", i}};
    if (order == OrderKind::kMatching) {
      c["M"] = dec(rep.matching);
    } else {
      c["L"] = lagrange_json(rep.lagrange, opt.digits);
    }
    c["members"] = std::move(members);
    classes.push_back(std::move(c));
  }
  Json j{{"a", a},
         {"b", b},
         {"order", order_name(order)},
         {"classes", std::move(classes)}};
  return render(j, opt);
}

Report snake_report(const PathWord& word, bool dot, const ReportOptions& opt) {
  const SnakeGraph g = build_snake(word);
  if (dot) return {snake_to_dot(g, word.str()), true};
  Json tiles = Json::array();
  for (const Tile& t : g.tiles()) tiles.push_back({t.anchor.x, t.anchor.y});
  Json j{{"word", word.str()},
         {"tiles", std::move(tiles)},
         {"vertices", g.vertices().size()},
         {"edges", g.edges().size()},
         {"matchings", dec(count_perfect_matchings(g))}};
  return render(j, opt);
}

Report markov_tree_report(int depth, const ReportOptions& opt) {
  Json rows = Json::array();
  for (const MarkovTriple& t : markov_tree(depth)) {
    rows.push_back({{"x", dec(t.x)}, {"y", dec(t.y)}, {"z", dec(t.z)}});
  }
  if (opt.format == Format::kCsv) return render(rows, opt);
  return render(Json{{"depth", depth}, {"triples", std::move(rows)}}, opt);
}

Report markov_number_report(int a, int b, int depth, const ReportOptions& opt) {
  const BigInt m = markov_number(a, b);
  const bool in_tree = verify_markov_membership(a, b, depth);
  const bool identity = lagrange_markov_identity(a, b).holds();
  Json j{{"a", a},
         {"b", b},
         {"m", dec(m)},
         {"in_tree", in_tree},
         {"identity", identity}};
  return render(j, opt, in_tree && identity);
}

Report markov_identity_report(int a, int b, const ReportOptions& opt) {
  const MarkovIdentity id = lagrange_markov_identity(a, b);
  Json j{{"a", a},
         {"b", b},
         {"m", dec(id.m)},
         {"disc", dec(id.lagrange.disc)},
         {"q", dec(id.lagrange.q)},
         {"lhs", dec(id.lhs)},
         {"rhs", dec(id.rhs)},
         {"identity", id.holds()}};
  return render(j, opt, id.holds());
}

Report markov_slope_report(int a, int b, int a2, int b2,
                           const ReportOptions& opt) {
  const SlopeCheck c = slope_inequality_check(a, b, a2, b2);
  Json j{{"as_given", slope_json(c.as_given)},
         {"transposed", slope_json(c.transposed)},
         {"transposed_by_q", slope_json(c.transposed_by_q)},
         {"verified", !c.any_violated()}};
  return render(j, opt, !c.any_violated());
}

Report suplag_report(int n_max, const ReportOptions& opt) {
  check_digits(opt);
  const Surd limit(1, 1, 1, 5);
  Json rows = Json::array();
  bool all = true;
  for (const SupRow& r : sup_convergence_table(n_max)) {
    all = all && r.holds();
    rows.push_back({{"n", r.n},
                    {"disc", dec(r.value.disc)},
                    {"q", dec(r.value.q)},
                    {"L_approx", decimal_approx(r.value, opt.digits)},
                    {"gap_approx", decimal_approx_difference(
                                       limit, r.value.to_surd(), opt.digits)},
                    {"bound", rational_text(r.bound)},
                    {"verified", r.holds()}});
  }
  if (opt.format == Format::kCsv) return render(rows, opt, all);
  return render(Json{{"rows", std::move(rows)}, {"verified", all}}, opt, all);
}

Report classify_report(const PathWord& w1, const PathWord& w2,
                       const ReportOptions& opt) {
  check_digits(opt);
  const Classification c = classify_entries(make_entry(w1, opt.route),
                                            make_entry(w2, opt.route));
  Json j{{"w", entry_json(c.first, opt.digits)},
         {"w_prime", entry_json(c.second, opt.digits)},
         {"swapped", c.swapped},
         {"class", relation_tag(c.relation)},
         {"relation", relation_text(c.relation)}};
  return render(j, opt);
}

Report scan_classes_report(int a, int b, const ReportOptions& opt) {
  const ClassScan s = scan_classes(a, b, opt.max_paths, opt.jobs);
  Json classes = Json::array();
  for (RelationClass rc : kAllRelationClasses) {
    const auto i = static_cast<std::size_t>(rc);
    Json c{{"class", relation_tag(rc)},
           {"relation", relation_text(rc)},
           {"count", std::to_string(s.counts[i])}};
    if (s.examples[i]) {
      c["example"] = {s.examples[i]->first.str(), s.examples[i]->second.str()};
    } else {
      c["example"] = nullptr;
    }
    classes.push_back(std::move(c));
  }
  if (opt.format == Format::kCsv) return render(classes, opt);
  Json j{{"a", a},
         {"b", b},
         {"paths", s.path_count},
         {"pairs", std::to_string(s.pair_count)},
         {"classes", std::move(classes)}};
  return render(j, opt);
}

Report exchange_report(const PathWord& word,
                       std::optional<std::size_t> block_index,
                       const ReportOptions& opt) {
  std::vector<std::size_t> positions;
  if (block_index) {
    positions.push_back(*block_index);
  } else {
    positions = exchange_positions(word);
  }
  Json rows = Json::array();
  bool all = true;
  for (std::size_t k : positions) {
    const ExchangeReport r = verify_exchange_identity(word, k);
    all = all && r.holds();
    rows.push_back(exchange_json(r));
  }
  if (opt.format == Format::kCsv) return render(rows, opt, all);
  return render(Json{{"word", word.str()},
                     {"moves", std::move(rows)},
                     {"verified", all}},
                opt, all);
}

}  // namespace lagpath
