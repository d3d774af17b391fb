#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "lagpath/orders.hpp"
#include "lagpath/paths.hpp"
#include "lagpath/quadratic.hpp"

namespace lagpath {

enum class Format { kJson, kCsv };

struct ReportOptions {
  Format format = Format::kJson;
  int digits = 12;
  unsigned jobs = 1;
  std::uint64_t max_paths = kDefaultMaxPaths;
  LagrangeRoute route = LagrangeRoute::kCanonical;
};

/// Rendered output plus the outcome of any check it carried. Reports that
/// only compute values are always `verified`.
struct Report {
  std::string text;
  bool verified = true;
};

// Every generator returns text terminated by a newline. JSON keys come out
// in a fixed order; big integers are decimal strings. CSV has a header row.

Report path_report(const PathWord& word, const ReportOptions& opt);
/// One JSON object per line (or one CSV row per path), lexicographic order.
Report enumerate_report(int a, int b, const ReportOptions& opt);
Report verify_max_report(int a, int b, const ReportOptions& opt);
/// `dot` selects Graphviz output regardless of `opt.format`.
Report hasse_report(int a, int b, OrderKind order, bool dot,
                    const ReportOptions& opt);
Report snake_report(const PathWord& word, bool dot, const ReportOptions& opt);
Report markov_tree_report(int depth, const ReportOptions& opt);
Report markov_number_report(int a, int b, int depth, const ReportOptions& opt);
Report markov_identity_report(int a, int b, const ReportOptions& opt);
Report markov_slope_report(int a, int b, int a2, int b2,
                           const ReportOptions& opt);
Report suplag_report(int n_max, const ReportOptions& opt);
Report classify_report(const PathWord& w1, const PathWord& w2,
                       const ReportOptions& opt);
Report scan_classes_report(int a, int b, const ReportOptions& opt);
/// Every applicable position when `block_index` is empty.
Report exchange_report(const PathWord& word,
                       std::optional<std::size_t> block_index,
                       const ReportOptions& opt);

}  // namespace lagpath
