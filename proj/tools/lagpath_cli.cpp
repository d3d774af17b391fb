// Command-line front end. Links only the C interface.
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>

#include "lagpath/lagpath.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitVerify = 2;
constexpr int kExitUsage = 64;

struct Globals {
  std::string format = "json";
  int digits = 12;
  unsigned jobs = 1;
  unsigned long long max_paths = 1'000'000;
  bool direct = false;
};

struct ConfigDeleter {
  void operator()(lp_config* c) const { lp_config_free(c); }
};
using ConfigPtr = std::unique_ptr<lp_config, ConfigDeleter>;

int exit_code(lp_status s) {
  switch (s) {
    case LP_OK: return kExitOk;
    case LP_VERIFY_FAILED: return kExitVerify;
    case LP_ERR_INVALID_ARG: return kExitUsage;
    default: return kExitError;
  }
}

ConfigPtr make_config(const Globals& g) {
  lp_config* raw = nullptr;
  if (lp_config_new(&raw) != LP_OK) return nullptr;
  ConfigPtr cfg(raw);
  lp_config_set_format(cfg.get(),
                       g.format == "csv" ? LP_FORMAT_CSV : LP_FORMAT_JSON);
  lp_config_set_digits(cfg.get(), g.digits);
  lp_config_set_jobs(cfg.get(), g.jobs);
  lp_config_set_max_paths(cfg.get(), g.max_paths);
  lp_config_set_direct(cfg.get(), g.direct ? 1 : 0);
  return cfg;
}

// Runs one report call, prints its text and maps the status to an exit code.
int run(const Globals& g,
        const std::function<lp_status(const lp_config*, char**)>& call) {
  ConfigPtr cfg = make_config(g);
  if (!cfg) {
    std::cerr << "error: " << lp_last_error() << '\n';
    return kExitError;
  }
  char* text = nullptr;
  const lp_status s = call(cfg.get(), &text);
  if (text) {
    std::fputs(text, stdout);
    std::fflush(stdout);
    lp_string_free(text);
  }
  if (s != LP_OK) {
    std::cerr << "error: " << lp_status_name(s) << ": " << lp_last_error()
              << '\n';
  }
  return exit_code(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matching and Lagrange orders on below-diagonal lattice paths"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--digits", g.digits, "Fractional digits of approximations")
      ->check(CLI::PositiveNumber);
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--max-paths", g.max_paths, "Cap on enumerated paths");
  app.add_flag("--direct", g.direct,
               "Compute Lagrange numbers as the shift maximum");

  std::function<int()> action;

  std::string word;
  std::string word2;
  int a = 0;
  int b = 0;
  int a2 = 0;
  int b2 = 0;

  auto* path = app.add_subcommand("path", "f, g, M and L of one path");
  path->add_option("word", word)->required();
  path->callback([&] {
    action = [&] {
      return run(g, [&](const lp_config* c, char** o) {
        return lp_report_path(c, word.c_str(), o);
      });
    };
  });

  auto* enumerate = app.add_subcommand("enumerate", "All below-diagonal paths");
  enumerate->add_option("a", a)->required();
  enumerate->add_option("b", b)->required();
  enumerate->callback([&] {
    action = [&] {
      return run(g, [&](const lp_config* c, char** o) {
        return lp_report_enumerate(c, a, b, o);
      });
    };
  });

  auto* verify = app.add_subcommand("verify-max", "Check R^a U^b is the unique maximum");
  verify->add_option("a", a)->required();
  verify->add_option("b", b)->required();
  verify->callback([&] {
    action = [&] {
      return run(g, [&](const lp_config* c, char** o) {
        return lp_report_verify_max(c, a, b, o);
      });
    };
  });

  std::string order = "M";
  bool dot = false;
  auto* hasse = app.add_subcommand("hasse", "Chain of value classes");
  hasse->add_option("a", a)->required();
  hasse->add_option("b", b)->required();
  hasse->add_option("--order", order)->check(CLI::IsMember({"M", "L"}));
  hasse->add_flag("--dot", dot, "Graphviz output");
  hasse->callback([&] {
    action = [&] {
      return run(g, [&](const lp_config* c, char** o) {
        return lp_report_hasse(c, a, b, order == "L" ? LP_ORDER_L : LP_ORDER_M,
                               dot ? 1 : 0, o);
      });
    };
  });

  auto* snake = app.add_subcommand("snake", "Snake graph of a path");
  snake->add_option("word", word)->required();
  snake->add_flag("--dot", dot, "Graphviz output");
  snake->callback([&] {
    action = [&] {
      return run(g, [&](const lp_config* c, char** o) {
        return lp_report_snake(c, word.c_str(), dot ? 1 : 0, o);
      });
    };
  });

  int depth = 25;
  auto* markov = app.add_subcommand("markov", "Markov numbers");
  markov->require_subcommand(1);
  auto* tree = markov->add_subcommand("tree", "Triples near the root");
  tree->add_option("--depth", depth)->required()->check(CLI::NonNegativeNumber);
  tree->callback([&] {
    action = [&] {
      return run(g, [&](const lp_config* c, char** o) {
        return lp_report_markov_tree(c, depth, o);
      });
    };
  });
  auto* number = markov->add_subcommand("number", "Markov number at (a, b)");
  number->add_option("a", a)->required();
  number->add_option("b", b)->required();
  number->add_option("--depth", depth, "Tree depth for the membership check")
      ->check(CLI::NonNegativeNumber);
  number->callback([&] {
    action = [&] {
      return run(g, [&](const lp_config* c, char** o) {
        return lp_report_markov_number(c, a, b, depth, o);
      });
    };
  });
  auto* identity = markov->add_subcommand("identity", "disc m^2 = (9m^2 - 4) q^2");
  identity->add_option("a", a)->required();
  identity->add_option("b", b)->required();
  identity->callback([&] {
    action = [&] {
      return run(g, [&](const lp_config* c, char** o) {
        return lp_report_markov_identity(c, a, b, o);
      });
    };
  });
  auto* slope = markov->add_subcommand("slope", "Slope inequality between two indices");
  slope->add_option("a", a)->required();
  slope->add_option("b", b)->required();
  slope->add_option("a2", a2)->required();
  slope->add_option("b2", b2)->required();
  slope->callback([&] {
    action = [&] {
      return run(g, [&](const lp_config* c, char** o) {
        return lp_report_markov_slope(c, a, b, a2, b2, o);
      });
    };
  });

  int n_max = 12;
  auto* suplag = app.add_subcommand("suplag", "L(R^(n+1) U^n) against 1 + sqrt5");
  suplag->add_option("--n", n_max)->required()->check(CLI::PositiveNumber);
  suplag->callback([&] {
    action = [&] {
      return run(g, [&](const lp_config* c, char** o) {
        return lp_report_suplag(c, n_max, o);
      });
    };
  });

  auto* classify = app.add_subcommand("classify", "Relation class of two paths");
  classify->add_option("w1", word)->required();
  classify->add_option("w2", word2)->required();
  classify->callback([&] {
    action = [&] {
      return run(g, [&](const lp_config* c, char** o) {
        return lp_report_classify(c, word.c_str(), word2.c_str(), o);
      });
    };
  });

  auto* scan = app.add_subcommand("scan-classes", "Relation classes over all pairs");
  scan->add_option("a", a)->required();
  scan->add_option("b", b)->required();
  scan->callback([&] {
    action = [&] {
      return run(g, [&](const lp_config* c, char** o) {
        return lp_report_scan_classes(c, a, b, o);
      });
    };
  });

  long block = -1;
  auto* exchange = app.add_subcommand("exchange", "Exchange-move identity");
  exchange->add_option("word", word)->required();
  exchange->add_option("--block", block, "Block index (default: all)")
      ->check(CLI::NonNegativeNumber);
  exchange->callback([&] {
    action = [&] {
      return run(g, [&](const lp_config* c, char** o) {
        return lp_report_exchange(c, word.c_str(), block, o);
      });
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  return action ? action() : kExitUsage;
}
