#include "lagpath/lagpath.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "lagpath/contfrac.hpp"
#include "lagpath/error.hpp"
#include "lagpath/orders.hpp"
#include "lagpath/paths.hpp"
#include "lagpath/quadratic.hpp"
#include "lagpath/report.hpp"
#include "lagpath/snake.hpp"

struct lp_config {
  lagpath::ReportOptions options;
};

struct lp_path {
  lagpath::PathWord word;
};

struct lp_enum {
  lagpath::BelowDiagonalPaths stream;
};

namespace {

thread_local std::string g_last_error;

lp_status status_of(lagpath::ErrorKind kind) {
  switch (kind) {
    case lagpath::ErrorKind::kParse: return LP_ERR_PARSE;
    case lagpath::ErrorKind::kDomain: return LP_ERR_DOMAIN;
    case lagpath::ErrorKind::kShape: return LP_ERR_SHAPE;
    case lagpath::ErrorKind::kResource: return LP_ERR_RESOURCE;
    case lagpath::ErrorKind::kArithmetic: return LP_ERR_ARITHMETIC;
  }
  return LP_ERR_INTERNAL;
}

lp_status fail(lp_status status, const char* message) {
  g_last_error = message;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <class Body>
lp_status guarded(Body body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const lagpath::Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(LP_ERR_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return fail(LP_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(LP_ERR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

lagpath::ReportOptions options_of(const lp_config* cfg) {
  return cfg ? cfg->options : lagpath::ReportOptions{};
}

template <class Make>
lp_status emit(char** out, Make make) {
  if (!out) return fail(LP_ERR_INVALID_ARG, "null output pointer");
  return guarded([&] {
    const lagpath::Report r = make();
    *out = dup_string(r.text);
    if (!r.verified) {
      g_last_error = "verification failed";
      return LP_VERIFY_FAILED;
    }
    return LP_OK;
  });
}

lagpath::PathWord parse_arg(const char* text) {
  if (!text) throw lagpath::DomainError("null path text");
  return lagpath::PathWord::parse(text);
}

}  // namespace

extern "C" {

const char* lp_last_error(void) { return g_last_error.c_str(); }

const char* lp_status_name(lp_status status) {
  switch (status) {
    case LP_OK: return "ok";
    case LP_ERR_PARSE: return "parse error";
    case LP_ERR_DOMAIN: return "domain error";
    case LP_ERR_SHAPE: return "shape error";
    case LP_ERR_RESOURCE: return "resource limit";
    case LP_ERR_ARITHMETIC: return "arithmetic error";
    case LP_VERIFY_FAILED: return "verification failed";
    case LP_ERR_INVALID_ARG: return "invalid argument";
    case LP_ERR_INTERNAL: return "internal error";
    case LP_END: return "end";
  }
  return "unknown status";
}

const char* lp_version(void) { return "1.0.0"; }

void lp_string_free(char* s) { std::free(s); }

lp_status lp_config_new(lp_config** out) {
  if (!out) return fail(LP_ERR_INVALID_ARG, "null output pointer");
  return guarded([&] {
    *out = new lp_config{};
    return LP_OK;
  });
}

void lp_config_free(lp_config* cfg) { delete cfg; }

lp_status lp_config_set_format(lp_config* cfg, lp_format format) {
  if (!cfg) return fail(LP_ERR_INVALID_ARG, "null config");
  if (format != LP_FORMAT_JSON && format != LP_FORMAT_CSV) {
    return fail(LP_ERR_INVALID_ARG, "unknown format");
  }
  cfg->options.format =
      format == LP_FORMAT_CSV ? lagpath::Format::kCsv : lagpath::Format::kJson;
  return LP_OK;
}

lp_status lp_config_set_digits(lp_config* cfg, int digits) {
  if (!cfg) return fail(LP_ERR_INVALID_ARG, "null config");
  if (digits < 1) return fail(LP_ERR_INVALID_ARG, "digits must be >= 1");
  cfg->options.digits = digits;
  return LP_OK;
}

lp_status lp_config_set_jobs(lp_config* cfg, unsigned jobs) {
  if (!cfg) return fail(LP_ERR_INVALID_ARG, "null config");
  if (jobs < 1) return fail(LP_ERR_INVALID_ARG, "jobs must be >= 1");
  cfg->options.jobs = jobs;
  return LP_OK;
}

lp_status lp_config_set_max_paths(lp_config* cfg, unsigned long long max_paths) {
  if (!cfg) return fail(LP_ERR_INVALID_ARG, "null config");
  cfg->options.max_paths = max_paths;
  return LP_OK;
}

lp_status lp_config_set_direct(lp_config* cfg, int direct) {
  if (!cfg) return fail(LP_ERR_INVALID_ARG, "null config");
  cfg->options.route = direct ? lagpath::LagrangeRoute::kDirect
                              : lagpath::LagrangeRoute::kCanonical;
  return LP_OK;
}

lp_status lp_path_parse(const char* text, lp_path** out) {
  if (!out) return fail(LP_ERR_INVALID_ARG, "null output pointer");
  return guarded([&] {
    *out = new lp_path{parse_arg(text)};
    return LP_OK;
  });
}

lp_status lp_path_christoffel(int a, int b, lp_path** out) {
  if (!out) return fail(LP_ERR_INVALID_ARG, "null output pointer");
  return guarded([&] {
    *out = new lp_path{lagpath::christoffel(a, b)};
    return LP_OK;
  });
}

void lp_path_free(lp_path* path) { delete path; }

lp_status lp_path_word(const lp_path* path, char** out) {
  if (!path || !out) return fail(LP_ERR_INVALID_ARG, "null argument");
  return guarded([&] {
    *out = dup_string(path->word.str());
    return LP_OK;
  });
}

lp_status lp_path_endpoint(const lp_path* path, int* a, int* b) {
  if (!path || !a || !b) return fail(LP_ERR_INVALID_ARG, "null argument");
  *a = path->word.rights();
  *b = path->word.ups();
  return LP_OK;
}

lp_status lp_path_is_below_diagonal(const lp_path* path, int* out) {
  if (!path || !out) return fail(LP_ERR_INVALID_ARG, "null argument");
  *out = lagpath::is_below_diagonal(path->word) ? 1 : 0;
  return LP_OK;
}

lp_status lp_path_block_count(const lp_path* path, size_t* out) {
  if (!path || !out) return fail(LP_ERR_INVALID_ARG, "null argument");
  return guarded([&] {
    *out = lagpath::blocks(path->word).size();
    return LP_OK;
  });
}

lp_status lp_path_exchange(const lp_path* path, size_t block_index,
                           lp_path** out) {
  if (!path || !out) return fail(LP_ERR_INVALID_ARG, "null argument");
  return guarded([&] {
    *out = new lp_path{lagpath::exchange_move(path->word, block_index)};
    return LP_OK;
  });
}

lp_status lp_path_matching_number(const lp_path* path, char** out) {
  if (!path || !out) return fail(LP_ERR_INVALID_ARG, "null argument");
  return guarded([&] {
    *out = dup_string(lagpath::matching_number(path->word).str());
    return LP_OK;
  });
}

lp_status lp_path_lagrange(const lp_path* path, char** disc, char** q) {
  if (!path || !disc || !q) return fail(LP_ERR_INVALID_ARG, "null argument");
  return guarded([&] {
    const lagpath::LagrangeValue l = lagpath::lagrange_number(path->word);
    char* d = dup_string(l.disc.str());
    try {
      *q = dup_string(l.q.str());
    } catch (...) {
      std::free(d);
      throw;
    }
    *disc = d;
    return LP_OK;
  });
}

lp_status lp_path_snake_matchings(const lp_path* path, char** out) {
  if (!path || !out) return fail(LP_ERR_INVALID_ARG, "null argument");
  return guarded([&] {
    const lagpath::SnakeGraph g = lagpath::build_snake(path->word);
    *out = dup_string(lagpath::count_perfect_matchings(g).str());
    return LP_OK;
  });
}

lp_status lp_path_compare(const lp_path* lhs, const lp_path* rhs,
                          lp_order order, int* out) {
  if (!lhs || !rhs || !out) return fail(LP_ERR_INVALID_ARG, "null argument");
  if (order != LP_ORDER_M && order != LP_ORDER_L) {
    return fail(LP_ERR_INVALID_ARG, "unknown order");
  }
  return guarded([&] {
    const auto c = order == LP_ORDER_M ? lagpath::cmp_M(lhs->word, rhs->word)
                                       : lagpath::cmp_L(lhs->word, rhs->word);
    *out = c < 0 ? -1 : (c > 0 ? 1 : 0);
    return LP_OK;
  });
}

lp_status lp_enum_open(int a, int b, lp_enum** out) {
  if (!out) return fail(LP_ERR_INVALID_ARG, "null output pointer");
  return guarded([&] {
    *out = new lp_enum{lagpath::BelowDiagonalPaths(a, b)};
    return LP_OK;
  });
}

lp_status lp_enum_next(lp_enum* it, lp_path** out) {
  if (!it || !out) return fail(LP_ERR_INVALID_ARG, "null argument");
  return guarded([&] {
    std::optional<lagpath::PathWord> w = it->stream.next();
    if (!w) return LP_END;
    *out = new lp_path{std::move(*w)};
    return LP_OK;
  });
}

void lp_enum_free(lp_enum* it) { delete it; }

lp_status lp_report_path(const lp_config* cfg, const char* word, char** out) {
  return emit(out, [&] {
    return lagpath::path_report(parse_arg(word), options_of(cfg));
  });
}

lp_status lp_report_enumerate(const lp_config* cfg, int a, int b, char** out) {
  return emit(out,
              [&] { return lagpath::enumerate_report(a, b, options_of(cfg)); });
}

lp_status lp_report_verify_max(const lp_config* cfg, int a, int b,
                               char** out) {
  return emit(out,
              [&] { return lagpath::verify_max_report(a, b, options_of(cfg)); });
}

lp_status lp_report_hasse(const lp_config* cfg, int a, int b, lp_order order,
                          int dot, char** out) {
  if (order != LP_ORDER_M && order != LP_ORDER_L) {
    return fail(LP_ERR_INVALID_ARG, "unknown order");
  }
  return emit(out, [&] {
    const auto kind = order == LP_ORDER_M ? lagpath::OrderKind::kMatching
                                          : lagpath::OrderKind::kLagrange;
    return lagpath::hasse_report(a, b, kind, dot != 0, options_of(cfg));
  });
}

lp_status lp_report_snake(const lp_config* cfg, const char* word, int dot,
                          char** out) {
  return emit(out, [&] {
    return lagpath::snake_report(parse_arg(word), dot != 0, options_of(cfg));
  });
}

lp_status lp_report_markov_tree(const lp_config* cfg, int depth, char** out) {
  return emit(out,
              [&] { return lagpath::markov_tree_report(depth, options_of(cfg)); });
}

lp_status lp_report_markov_number(const lp_config* cfg, int a, int b,
                                  int depth, char** out) {
  return emit(out, [&] {
    return lagpath::markov_number_report(a, b, depth, options_of(cfg));
  });
}

lp_status lp_report_markov_identity(const lp_config* cfg, int a, int b,
                                    char** out) {
  return emit(out, [&] {
    return lagpath::markov_identity_report(a, b, options_of(cfg));
  });
}

lp_status lp_report_markov_slope(const lp_config* cfg, int a, int b, int a2,
                                 int b2, char** out) {
  return emit(out, [&] {
    return lagpath::markov_slope_report(a, b, a2, b2, options_of(cfg));
  });
}

lp_status lp_report_suplag(const lp_config* cfg, int n_max, char** out) {
  return emit(out,
              [&] { return lagpath::suplag_report(n_max, options_of(cfg)); });
}

lp_status lp_report_classify(const lp_config* cfg, const char* w1,
                             const char* w2, char** out) {
  return emit(out, [&] {
    return lagpath::classify_report(parse_arg(w1), parse_arg(w2),
                                    options_of(cfg));
  });
}

lp_status lp_report_scan_classes(const lp_config* cfg, int a, int b,
                                 char** out) {
  return emit(out, [&] {
    return lagpath::scan_classes_report(a, b, options_of(cfg));
  });
}

lp_status lp_report_exchange(const lp_config* cfg, const char* word,
                             long block_index, char** out) {
  return emit(out, [&] {
    std::optional<std::size_t> index;
    if (block_index >= 0) index = static_cast<std::size_t>(block_index);
    return lagpath::exchange_report(parse_arg(word), index, options_of(cfg));
  });
}

}  // extern "C"
