#include "rankforge/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <type_traits>

#include "rankforge/csv_io.hpp"
#include "rankforge/error.hpp"

namespace rankforge {

namespace {

using nlohmann::ordered_json;

double round6(double v) {
  const double r = std::round(v * 1e6) / 1e6;
  return r == 0.0 ? 0.0 : r;  // no "-0.0"
}

void round_floats(ordered_json& node) {
  if (node.is_number_float()) {
    node = round6(node.get<double>());
  } else if (node.is_structured()) {
    for (auto& child : node) round_floats(child);
  }
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", round6(v));
  return buf;
}

ordered_json names(const std::vector<std::string>& teams,
                   const std::vector<competition::TeamIndex>& indices) {
  ordered_json out = ordered_json::array();
  for (auto i : indices) out.push_back(teams[i]);
  return out;
}

void add_column(Report& report, ordered_json& ratings, const std::string& key,
                const std::string& column, const linalg::DenseVector& values) {
  ratings[key] = values;
  report.columns.emplace_back(column, values);
}

Report ratings_report(const competition::MatchList& matches,
                      const RunConfig& config, const MethodResult& result) {
  Report report;
  report.kind = Report::Kind::kRatings;
  report.teams = matches.teams();

  std::size_t draws = 0;
  for (const auto& m : matches.matches()) {
    if (m.score_a == m.score_b) ++draws;
  }

  auto& doc = report.document;
  doc["method"] = to_string(config.method);
  doc["teams"] = matches.teams();
  ordered_json ratings = ordered_json::object();

  std::visit(
      [&](const auto& value) {
        using T = std::decay_t<decltype(value)>;
        if constexpr (std::is_same_v<T, massey::RatingReport>) {
          add_column(report, ratings, "r", "rating", value.r);
          add_column(report, ratings, "r1", "r1", value.r1);
          add_column(report, ratings, "r2", "r2", value.r2);
          add_column(report, ratings, "o", "o", value.o);
          add_column(report, ratings, "d", "d", value.d);
          doc["ratings"] = ratings;
          ordered_json flows = ordered_json::array();
          for (const auto& f : value.flows) {
            flows.push_back({{"from", matches.team_name(f.i)},
                             {"to", matches.team_name(f.j)},
                             {"flow", f.flow}});
          }
          doc["flows"] = flows;
          const auto& dg = value.diagnostics;
          doc["diagnostics"] = {{"connected", dg.connected},
                                {"bipartite", dg.bipartite},
                                {"lambda2", dg.lambda2},
                                {"bound_lhs", dg.bound_lhs},
                                {"bound_rhs", dg.bound_rhs}};
          report.scalars = {{"lambda2", dg.lambda2},
                            {"bound_lhs", dg.bound_lhs},
                            {"bound_rhs", dg.bound_rhs}};
        } else if constexpr (std::is_same_v<T, alt::KeenerResult>) {
          add_column(report, ratings, "r", "rating", value.r);
          doc["ratings"] = ratings;
          doc["lambda"] = value.lambda;
          report.scalars = {{"lambda", value.lambda}};
        } else if constexpr (std::is_same_v<T, alt::OdmResult>) {
          linalg::DenseVector overall(value.offense.size());
          for (std::size_t i = 0; i < overall.size(); ++i) {
            overall[i] = value.offense[i] / value.defense[i];
          }
          add_column(report, ratings, "rating", "rating", overall);
          add_column(report, ratings, "o", "o", value.offense);
          add_column(report, ratings, "d", "d", value.defense);
          doc["ratings"] = ratings;
        } else {
          add_column(report, ratings, "r", "rating", value);
          doc["ratings"] = ratings;
        }
      },
      result);

  ordered_json meta = {{"teams", matches.team_count()},
                       {"matches", matches.match_count()},
                       {"draws", draws}};
  if (config.method == Method::kMassey) {
    meta["draw_orientation"] = "lower registry index takes +1";
  }
  if (config.method == Method::kKeener || config.method == Method::kOdm) {
    meta["smoothing"] = to_string(config.smoothing);
    meta["tol"] = config.tol;
    meta["max_iter"] = config.max_iter;
  }
  if (config.method == Method::kElo) {
    meta["kappa"] = config.elo.kappa;
    meta["zeta"] = config.elo.zeta;
    meta["initial_rating"] = config.elo.initial_rating;
  }
  doc["metadata"] = meta;
  report.scalars["draws"] = static_cast<double>(draws);
  return report;
}

std::string scalar_text(const ordered_json& value) {
  if (value.is_number_float()) return fixed6(value.get<double>());
  if (value.is_string()) return value.get<std::string>();
  if (value.is_null()) return "";
  if (value.is_array()) {
    std::string out;
    for (const auto& item : value) {
      if (!out.empty()) out += ';';
      out += item.is_structured() ? "[" + scalar_text(item) + "]" : scalar_text(item);
    }
    return out;
  }
  if (value.is_object()) {
    std::string out;
    for (const auto& [k, v] : value.items()) {
      if (!out.empty()) out += ';';
      out += k + "=" + (v.is_structured() ? "[" + scalar_text(v) + "]" : scalar_text(v));
    }
    return out;
  }
  return value.dump();
}

std::string render_ratings_csv(const Report& report) {
  std::string out = "team";
  for (const auto& [name, values] : report.columns) out += "," + name;
  out += '\n';
  for (std::size_t i = 0; i < report.teams.size(); ++i) {
    out += report.teams[i];
    for (const auto& [name, values] : report.columns) out += "," + fixed6(values[i]);
    out += '\n';
  }
  return out;
}

std::string pad(const std::string& s, std::size_t width, bool left) {
  if (s.size() >= width) return s;
  const std::string fill(width - s.size(), ' ');
  return left ? s + fill : fill + s;
}

std::string render_ratings_table(const Report& report) {
  std::size_t team_width = 4;
  for (const auto& t : report.teams) team_width = std::max(team_width, t.size());
  std::vector<std::vector<std::string>> cells(report.columns.size());
  std::vector<std::size_t> widths;
  for (std::size_t c = 0; c < report.columns.size(); ++c) {
    std::size_t w = report.columns[c].first.size();
    for (double v : report.columns[c].second) {
      cells[c].push_back(fixed6(v));
      w = std::max(w, cells[c].back().size());
    }
    widths.push_back(w);
  }
  std::string out = pad("team", team_width, true);
  for (std::size_t c = 0; c < report.columns.size(); ++c) {
    out += "  " + pad(report.columns[c].first, widths[c], false);
  }
  out += '\n';
  for (std::size_t i = 0; i < report.teams.size(); ++i) {
    out += pad(report.teams[i], team_width, true);
    for (std::size_t c = 0; c < cells.size(); ++c) {
      out += "  " + pad(cells[c][i], widths[c], false);
    }
    out += '\n';
  }
  return out;
}

std::string render_summary(const Report& report, bool csv) {
  std::size_t key_width = 0;
  for (const auto& [k, v] : report.document.items()) {
    key_width = std::max(key_width, k.size());
  }
  std::string out = csv ? "key,value\n" : "";
  for (const auto& [k, v] : report.document.items()) {
    out += csv ? k + "," : pad(k, key_width, true) + "  ";
    out += scalar_text(v);
    out += '\n';
  }
  return out;
}

}  // namespace

const linalg::DenseVector* Report::column(const std::string& name) const {
  for (const auto& [key, values] : columns) {
    if (key == name) return &values;
  }
  return nullptr;
}

Report rate_report(const competition::MatchList& matches, const RunConfig& config) {
  return ratings_report(matches, config, rate_matches(matches, config));
}

Report network_report(const netflow::WeightedDigraph& g, const RunConfig& config) {
  const auto matches = netflow::digraph_to_matches(g);
  Report report = ratings_report(matches, config, rate_matches(matches, config));
  report.document["metadata"]["nodes"] = g.node_count();
  report.document["metadata"]["edges"] = g.edge_count();
  report.document["metadata"]["self_loops_dropped"] = g.dropped_self_loops();
  report.scalars["self_loops_dropped"] = static_cast<double>(g.dropped_self_loops());
  return report;
}

Report graph_check_report(const competition::MatchList& matches) {
  const auto graph = competition::build_match_graph(matches);
  const bool connected = competition::is_connected(graph);

  Report report;
  report.kind = Report::Kind::kSummary;
  report.teams = matches.teams();
  auto& doc = report.document;
  doc["teams"] = matches.teams();
  doc["matches"] = matches.match_count();
  doc["connected"] = connected;
  doc["components"] = competition::component_count(graph);
  doc["zero_game_teams"] = names(matches.teams(), graph.isolated_teams());
  doc["bipartite"] = !competition::has_odd_cycle(graph);
  if (connected && matches.team_count() > 0) {
    if (auto parts = competition::bipartition(graph)) {
      doc["partition"] = {{"U", names(matches.teams(), parts->u)},
                          {"V", names(matches.teams(), parts->v)}};
    } else {
      doc["partition"] = nullptr;
    }
  } else {
    doc["partition"] = nullptr;
  }

  double lambda2 = 0.0;
  if (matches.team_count() >= 2) {
    lambda2 = linalg::symmetric_eigenvalues(graph.laplacian())[1];
    if (!connected) lambda2 = 0.0;
  }
  doc["lambda2"] = lambda2;
  report.scalars["lambda2"] = lambda2;

  if (matches.fully_dated()) {
    const auto milestones = competition::day_milestones(matches);
    doc["days_to_connected"] =
        milestones.connected ? ordered_json(*milestones.connected) : ordered_json();
    doc["days_to_nonbipartite"] = milestones.nonbipartite
                                      ? ordered_json(*milestones.nonbipartite)
                                      : ordered_json();
  } else {
    doc["days_to_connected"] = nullptr;
    doc["days_to_nonbipartite"] = nullptr;
  }
  return report;
}

Report simulate_report(std::size_t teams, std::optional<std::uint64_t> seed,
                       std::size_t trials) {
  if (trials == 0) {
    throw Error(ErrorKind::kInvalidArgument, "--trials must be positive");
  }
  std::size_t conn_min = SIZE_MAX, conn_max = 0, odd_min = SIZE_MAX, odd_max = 0;
  double conn_sum = 0.0, odd_sum = 0.0;
  bool within = true;
  ordered_json first_schedule;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto schedule =
        seed ? competition::shuffled_round_robin(teams, *seed + t)
             : (t == 0 ? competition::round_robin_schedule(teams)
                       : competition::shuffled_round_robin(teams, t));
    const std::size_t c = competition::days_to_connected(schedule);
    const std::size_t o = competition::days_to_nonbipartite(schedule);
    conn_min = std::min(conn_min, c);
    conn_max = std::max(conn_max, c);
    odd_min = std::min(odd_min, o);
    odd_max = std::max(odd_max, o);
    conn_sum += static_cast<double>(c);
    odd_sum += static_cast<double>(o);
    within = within && c >= 2 && c <= teams / 2 && o >= 3 && o <= teams / 2 + 1;
    if (t == 0) {
      first_schedule = ordered_json::array();
      for (const auto& day : schedule.days()) {
        ordered_json pairs = ordered_json::array();
        for (auto [i, j] : day) pairs.push_back({i + 1, j + 1});
        first_schedule.push_back(pairs);
      }
    }
  }

  Report report;
  report.kind = Report::Kind::kSummary;
  auto& doc = report.document;
  doc["teams"] = teams;
  doc["seed"] = seed ? ordered_json(*seed) : ordered_json();
  doc["trials"] = trials;
  const double n = static_cast<double>(trials);
  doc["days_to_connected"] = {
      {"min", conn_min}, {"max", conn_max}, {"mean", conn_sum / n}};
  doc["days_to_nonbipartite"] = {
      {"min", odd_min}, {"max", odd_max}, {"mean", odd_sum / n}};
  doc["bounds"] = {{"connected", {2, teams / 2}},
                   {"nonbipartite", {3, teams / 2 + 1}}};
  doc["within_bounds"] = within;
  doc["schedule"] = first_schedule;
  report.scalars = {{"days_to_connected_min", static_cast<double>(conn_min)},
                    {"days_to_connected_max", static_cast<double>(conn_max)},
                    {"days_to_nonbipartite_min", static_cast<double>(odd_min)},
                    {"days_to_nonbipartite_max", static_cast<double>(odd_max)}};
  return report;
}

std::string render(const Report& report, OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson: {
      ordered_json doc = report.document;
      round_floats(doc);
      return doc.dump(2) + "\n";
    }
    case OutputFormat::kCsv:
      return report.kind == Report::Kind::kRatings ? render_ratings_csv(report)
                                                   : render_summary(report, true);
    case OutputFormat::kTable:
      return report.kind == Report::Kind::kRatings ? render_ratings_table(report)
                                                   : render_summary(report, false);
  }
  return {};
}

}  // namespace rankforge
