// Command-line front end. Everything goes through the C API in
// rankforge/rankforge.h; this file only handles flags, files and printing.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "rankforge/rankforge.h"

namespace {

enum class LogLevel { kError = 0, kInfo = 1, kDebug = 2 };

LogLevel log_level() {
  const char* env = std::getenv("RANK_FORGE_LOG");
  if (env == nullptr) return LogLevel::kError;
  const std::string v(env);
  if (v == "debug") return LogLevel::kDebug;
  if (v == "info") return LogLevel::kInfo;
  return LogLevel::kError;
}

void log(LogLevel level, const std::string& message) {
  if (static_cast<int>(level) > static_cast<int>(log_level())) return;
  std::cerr << "rankforge: " << (level == LogLevel::kDebug ? "debug: " : "info: ")
            << message << '\n';
}

int report_error(int status) {
  std::cerr << "rankforge: error: " << rf_last_error_kind() << ": "
            << rf_last_error() << '\n';
  return status;
}

struct ConfigDeleter {
  void operator()(rf_config* c) const { rf_config_free(c); }
};
struct MatchListDeleter {
  void operator()(rf_match_list* l) const { rf_match_list_free(l); }
};
struct DigraphDeleter {
  void operator()(rf_digraph* g) const { rf_digraph_free(g); }
};
struct ReportDeleter {
  void operator()(rf_report* r) const { rf_report_free(r); }
};

using ConfigPtr = std::unique_ptr<rf_config, ConfigDeleter>;
using MatchListPtr = std::unique_ptr<rf_match_list, MatchListDeleter>;
using DigraphPtr = std::unique_ptr<rf_digraph, DigraphDeleter>;
using ReportPtr = std::unique_ptr<rf_report, ReportDeleter>;

// Flags shared by the rating subcommands, kept as text and handed to
// rf_config_set so validation lives in one place.
struct Flags {
  std::vector<std::pair<std::string, std::optional<std::string>>> values{
      {"method", std::nullopt},    {"smoothing", std::nullopt},
      {"tol", std::nullopt},       {"max-iter", std::nullopt},
      {"kappa", std::nullopt},     {"zeta", std::nullopt},
      {"init-rating", std::nullopt}, {"output", std::nullopt},
      {"seed", std::nullopt},      {"input", std::nullopt}};

  std::optional<std::string>& operator[](const std::string& key) {
    for (auto& [k, v] : values) {
      if (k == key) return v;
    }
    throw std::logic_error("unknown flag " + key);
  }
};

const std::map<std::string, std::string> kFlagHelp = {
    {"method", "massey (default), keener, odm or elo"},
    {"smoothing", "Keener/ODM strengths: laplace (default) or raw"},
    {"tol", "convergence tolerance for iterative methods (default 1e-10)"},
    {"max-iter", "iteration cap for iterative methods (default 100000)"},
    {"kappa", "Elo step size (default 25)"},
    {"zeta", "Elo logistic scale (default 400)"},
    {"init-rating", "Elo starting rating (default 1500)"},
    {"output", "json (default), csv or table"},
    {"input", "CSV file; stdin when omitted or '-'"},
    {"seed", "base seed for shuffled schedules"},
};

void add_flags(CLI::App* cmd, Flags& flags, const std::vector<std::string>& keys) {
  for (const auto& key : keys) {
    cmd->add_option("--" + key, flags[key], kFlagHelp.at(key));
  }
}

// Returns 0 on success or the status to exit with.
int apply(rf_config* config, Flags& flags) {
  for (const auto& [key, value] : flags.values) {
    if (!value) continue;
    log(LogLevel::kDebug, "config " + key + " = " + *value);
    if (int status = rf_config_set(config, key.c_str(), value->c_str())) {
      return report_error(status);
    }
  }
  return 0;
}

std::optional<std::string> read_input(const std::optional<std::string>& path) {
  if (!path || *path == "-") {
    log(LogLevel::kInfo, "reading standard input");
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(*path, std::ios::binary);
  if (!in) return std::nullopt;
  log(LogLevel::kInfo, "reading " + *path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int emit(const rf_report* report, const rf_config* config) {
  char* text = nullptr;
  if (int status = rf_report_render(report, rf_config_output(config), &text)) {
    return report_error(status);
  }
  std::cout << text;
  rf_string_free(text);
  return 0;
}

int load_matches(Flags& flags, MatchListPtr& out) {
  const auto text = read_input(flags["input"]);
  if (!text) {
    std::cerr << "rankforge: error: cannot read input '" << *flags["input"] << "'\n";
    return RF_ERR_PARSE;
  }
  rf_match_list* raw = nullptr;
  if (int status = rf_match_list_parse_csv(text->c_str(), &raw)) {
    return report_error(status);
  }
  out.reset(raw);
  log(LogLevel::kInfo, "parsed " + std::to_string(rf_match_list_match_count(raw)) +
                           " matches over " +
                           std::to_string(rf_match_list_team_count(raw)) + " teams");
  return 0;
}

int run_rate(Flags& flags) {
  ConfigPtr config(rf_config_new());
  if (int status = apply(config.get(), flags)) return status;
  MatchListPtr matches;
  if (int status = load_matches(flags, matches)) return status;
  rf_report* raw = nullptr;
  if (int status = rf_rate(matches.get(), config.get(), &raw)) {
    return report_error(status);
  }
  ReportPtr report(raw);
  double draws = 0.0;
  if (rf_report_scalar(report.get(), "draws", &draws) == RF_OK && draws > 0.0) {
    log(LogLevel::kInfo, std::to_string(static_cast<long>(draws)) +
                             " drawn matches (oriented towards the lower registry index)");
  }
  return emit(report.get(), config.get());
}

int run_graph_check(Flags& flags) {
  ConfigPtr config(rf_config_new());
  if (int status = apply(config.get(), flags)) return status;
  MatchListPtr matches;
  if (int status = load_matches(flags, matches)) return status;
  rf_report* raw = nullptr;
  if (int status = rf_graph_check(matches.get(), &raw)) return report_error(status);
  ReportPtr report(raw);
  return emit(report.get(), config.get());
}

int run_network_rate(Flags& flags) {
  ConfigPtr config(rf_config_new());
  if (int status = apply(config.get(), flags)) return status;
  const auto text = read_input(flags["input"]);
  if (!text) {
    std::cerr << "rankforge: error: cannot read input '" << *flags["input"] << "'\n";
    return RF_ERR_PARSE;
  }
  rf_digraph* graph_raw = nullptr;
  if (int status = rf_digraph_parse_csv(text->c_str(), &graph_raw)) {
    return report_error(status);
  }
  DigraphPtr graph(graph_raw);
  if (const auto loops = rf_digraph_self_loops_dropped(graph.get())) {
    std::cerr << "rankforge: warning: dropped " << loops << " self-loop edge(s)\n";
  }
  rf_report* raw = nullptr;
  if (int status = rf_network_rate(graph.get(), config.get(), &raw)) {
    return report_error(status);
  }
  ReportPtr report(raw);
  return emit(report.get(), config.get());
}

int run_simulate(Flags& flags, std::size_t teams, std::size_t trials) {
  ConfigPtr config(rf_config_new());
  if (int status = apply(config.get(), flags)) return status;
  rf_report* raw = nullptr;
  if (int status = rf_simulate(teams, trials, config.get(), &raw)) {
    return report_error(status);
  }
  ReportPtr report(raw);
  return emit(report.get(), config.get());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sport rating engine: Massey least squares, Keener, offense-defense, Elo"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(rf_version()));

  const std::vector<std::string> rating_keys = {
      "method", "smoothing", "tol",    "max-iter", "kappa",
      "zeta",   "init-rating", "output", "input"};

  Flags rate_flags;
  auto* rate = app.add_subcommand("rate", "Rate teams from a match CSV");
  add_flags(rate, rate_flags, rating_keys);

  Flags check_flags;
  auto* check = app.add_subcommand(
      "graph-check", "Connectivity, bipartiteness and algebraic connectivity");
  add_flags(check, check_flags, {"output", "input"});

  Flags network_flags;
  auto* network = app.add_subcommand("network", "Rate nodes of a weighted digraph");
  network->require_subcommand(1);
  auto* network_rate = network->add_subcommand("rate", "Rate nodes from an edge CSV");
  add_flags(network_rate, network_flags, rating_keys);

  Flags sim_flags;
  std::size_t teams = 0;
  std::size_t trials = 1;
  auto* simulate = app.add_subcommand(
      "simulate", "Milestone days of round-robin schedules");
  simulate->add_option("--teams", teams, "even number of teams (>= 4)")->required();
  simulate->add_option("--trials", trials, "number of seeded schedules");
  add_flags(simulate, sim_flags, {"seed", "output"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "rankforge: error: " << e.what() << '\n';
    return RF_ERR_INVALID_CONFIG;
  }

  if (*rate) return run_rate(rate_flags);
  if (*check) return run_graph_check(check_flags);
  if (*network_rate) return run_network_rate(network_flags);
  if (*simulate) return run_simulate(sim_flags, teams, trials);
  return RF_ERR_INVALID_CONFIG;
}
