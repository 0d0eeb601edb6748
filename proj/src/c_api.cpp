#include "rankforge/rankforge.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>
#include <string_view>

#include "rankforge/csv_io.hpp"
#include "rankforge/error.hpp"
#include "rankforge/report.hpp"

struct rf_match_list {
  rankforge::competition::MatchList value;
};

struct rf_digraph {
  rankforge::netflow::WeightedDigraph value;
};

struct rf_config {
  rankforge::RunConfig value;
};

struct rf_report {
  rankforge::Report value;
};

namespace {

thread_local std::string last_error;
thread_local std::string last_error_kind;

rf_status fail(rf_status status, std::string kind, std::string message) {
  last_error_kind = std::move(kind);
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
rf_status guarded(Body&& body) {
  try {
    body();
    last_error.clear();
    last_error_kind.clear();
    return RF_OK;
  } catch (const rankforge::Error& e) {
    return fail(static_cast<rf_status>(rankforge::exit_code_for(e.kind())),
                rankforge::to_string(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(RF_ERR_INTERNAL, "OutOfMemory", "out of memory");
  } catch (const std::exception& e) {
    return fail(RF_ERR_INTERNAL, "Internal", e.what());
  }
}

rf_status null_argument(const char* what) {
  return fail(RF_ERR_INVALID_CONFIG, "InvalidArgument",
              std::string(what) + " must not be NULL");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

double parse_config_real(std::string_view key, std::string_view text) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() ||
      !std::isfinite(value)) {
    throw rankforge::Error(rankforge::ErrorKind::kInvalidArgument,
                           "--" + std::string(key) + ": expected a number, got '" +
                               std::string(text) + "'");
  }
  return value;
}

std::uint64_t parse_config_uint(std::string_view key, std::string_view text) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw rankforge::Error(rankforge::ErrorKind::kInvalidArgument,
                           "--" + std::string(key) +
                               ": expected a nonnegative integer, got '" +
                               std::string(text) + "'");
  }
  return value;
}

}  // namespace

extern "C" {

const char* rf_version(void) { return "0.1.0"; }

const char* rf_last_error(void) { return last_error.c_str(); }

const char* rf_last_error_kind(void) { return last_error_kind.c_str(); }

rf_status rf_match_list_parse_csv(const char* text, rf_match_list** out) {
  if (text == nullptr || out == nullptr) return null_argument("text/out");
  *out = nullptr;
  return guarded([&] {
    auto list = rankforge::io::parse_matches_csv(text);
    *out = new rf_match_list{std::move(list)};
  });
}

void rf_match_list_free(rf_match_list* list) { delete list; }

size_t rf_match_list_team_count(const rf_match_list* list) {
  return list ? list->value.team_count() : 0;
}

size_t rf_match_list_match_count(const rf_match_list* list) {
  return list ? list->value.match_count() : 0;
}

const char* rf_match_list_team_name(const rf_match_list* list, size_t index) {
  if (list == nullptr || index >= list->value.team_count()) return nullptr;
  return list->value.team_name(index).c_str();
}

rf_status rf_match_list_to_csv(const rf_match_list* list, char** out) {
  if (list == nullptr || out == nullptr) return null_argument("list/out");
  *out = nullptr;
  return guarded([&] { *out = copy_string(rankforge::io::matches_to_csv(list->value)); });
}

rf_status rf_digraph_parse_csv(const char* text, rf_digraph** out) {
  if (text == nullptr || out == nullptr) return null_argument("text/out");
  *out = nullptr;
  return guarded([&] {
    auto g = rankforge::io::parse_edges_csv(text);
    *out = new rf_digraph{std::move(g)};
  });
}

void rf_digraph_free(rf_digraph* graph) { delete graph; }

size_t rf_digraph_node_count(const rf_digraph* graph) {
  return graph ? graph->value.node_count() : 0;
}

size_t rf_digraph_edge_count(const rf_digraph* graph) {
  return graph ? graph->value.edge_count() : 0;
}

size_t rf_digraph_self_loops_dropped(const rf_digraph* graph) {
  return graph ? graph->value.dropped_self_loops() : 0;
}

rf_config* rf_config_new(void) {
  try {
    return new rf_config{};
  } catch (...) {
    return nullptr;
  }
}

void rf_config_free(rf_config* config) { delete config; }

rf_status rf_config_set(rf_config* config, const char* key, const char* value) {
  if (config == nullptr || key == nullptr || value == nullptr) {
    return null_argument("config/key/value");
  }
  return guarded([&] {
    const std::string_view k(key);
    const std::string_view v(value);
    auto updated = config->value;
    if (k == "method") {
      updated.method = rankforge::parse_method(v);
    } else if (k == "smoothing") {
      updated.smoothing = rankforge::parse_smoothing(v);
    } else if (k == "tol") {
      updated.tol = parse_config_real(k, v);
    } else if (k == "max-iter") {
      updated.max_iter = static_cast<std::size_t>(parse_config_uint(k, v));
    } else if (k == "kappa") {
      updated.elo.kappa = parse_config_real(k, v);
    } else if (k == "zeta") {
      updated.elo.zeta = parse_config_real(k, v);
    } else if (k == "init-rating") {
      updated.elo.initial_rating = parse_config_real(k, v);
    } else if (k == "output") {
      updated.output = rankforge::parse_output_format(v);
    } else if (k == "seed") {
      updated.seed = parse_config_uint(k, v);
    } else if (k == "input") {
      updated.input_path = std::string(v);
    } else {
      throw rankforge::Error(rankforge::ErrorKind::kInvalidArgument,
                             "unknown configuration key '" + std::string(k) + "'");
    }
    updated.validate();
    config->value = std::move(updated);
  });
}

const char* rf_config_output(const rf_config* config) {
  return config ? rankforge::to_string(config->value.output) : "json";
}

rf_status rf_rate(const rf_match_list* list, const rf_config* config,
                  rf_report** out) {
  if (list == nullptr || config == nullptr || out == nullptr) {
    return null_argument("list/config/out");
  }
  *out = nullptr;
  return guarded([&] {
    *out = new rf_report{rankforge::rate_report(list->value, config->value)};
  });
}

rf_status rf_graph_check(const rf_match_list* list, rf_report** out) {
  if (list == nullptr || out == nullptr) return null_argument("list/out");
  *out = nullptr;
  return guarded(
      [&] { *out = new rf_report{rankforge::graph_check_report(list->value)}; });
}

rf_status rf_network_rate(const rf_digraph* graph, const rf_config* config,
                          rf_report** out) {
  if (graph == nullptr || config == nullptr || out == nullptr) {
    return null_argument("graph/config/out");
  }
  *out = nullptr;
  return guarded([&] {
    *out = new rf_report{rankforge::network_report(graph->value, config->value)};
  });
}

rf_status rf_simulate(size_t teams, size_t trials, const rf_config* config,
                      rf_report** out) {
  if (config == nullptr || out == nullptr) return null_argument("config/out");
  *out = nullptr;
  return guarded([&] {
    *out = new rf_report{
        rankforge::simulate_report(teams, config->value.seed, trials)};
  });
}

void rf_report_free(rf_report* report) { delete report; }

size_t rf_report_team_count(const rf_report* report) {
  return report ? report->value.teams.size() : 0;
}

rf_status rf_report_vector(const rf_report* report, const char* name,
                           double* buf, size_t len) {
  if (report == nullptr || name == nullptr || buf == nullptr) {
    return null_argument("report/name/buf");
  }
  const auto* column = report->value.column(name);
  if (column == nullptr) {
    return fail(RF_ERR_INVALID_CONFIG, "InvalidArgument",
                std::string("report has no column '") + name + "'");
  }
  if (len < column->size()) {
    return fail(RF_ERR_INVALID_CONFIG, "InvalidArgument",
                "buffer shorter than the team count");
  }
  std::copy(column->begin(), column->end(), buf);
  return RF_OK;
}

rf_status rf_report_scalar(const rf_report* report, const char* name, double* out) {
  if (report == nullptr || name == nullptr || out == nullptr) {
    return null_argument("report/name/out");
  }
  auto it = report->value.scalars.find(name);
  if (it == report->value.scalars.end()) {
    return fail(RF_ERR_INVALID_CONFIG, "InvalidArgument",
                std::string("report has no scalar '") + name + "'");
  }
  *out = it->second;
  return RF_OK;
}

rf_status rf_report_render(const rf_report* report, const char* format, char** out) {
  if (report == nullptr || format == nullptr || out == nullptr) {
    return null_argument("report/format/out");
  }
  *out = nullptr;
  return guarded([&] {
    const auto fmt = rankforge::parse_output_format(format);
    *out = copy_string(rankforge::render(report->value, fmt));
  });
}

void rf_string_free(char* text) { std::free(text); }

}  // extern "C"
