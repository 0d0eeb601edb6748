#include "rankforge/competition.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>

#include "rankforge/error.hpp"

namespace rankforge::competition {

namespace {

// BFS colouring over all components. Returns colours (0/1) and whether an
// odd cycle was met.
std::pair<std::vector<int>, bool> two_colour(const MatchGraph& graph) {
  const std::size_t n = graph.size();
  std::vector<int> colour(n, -1);
  bool odd = false;
  for (std::size_t start = 0; start < n; ++start) {
    if (colour[start] != -1) continue;
    colour[start] = 0;
    std::queue<std::size_t> frontier;
    frontier.push(start);
    while (!frontier.empty()) {
      const std::size_t i = frontier.front();
      frontier.pop();
      for (std::size_t j = 0; j < n; ++j) {
        if (graph.adjacency(i, j) <= 0) continue;
        if (colour[j] == -1) {
          colour[j] = 1 - colour[i];
          frontier.push(j);
        } else if (colour[j] == colour[i]) {
          odd = true;
        }
      }
    }
  }
  return {colour, odd};
}

MatchGraph union_of_days(std::size_t n, const std::vector<Matching>& days,
                         std::size_t k) {
  MatchGraph g(n);
  for (std::size_t d = 0; d < k; ++d) {
    for (const auto& [i, j] : days[d]) g.add_edge(i, j);
  }
  return g;
}

}  // namespace

TeamIndex MatchList::add_team(std::string_view name) {
  std::string key(name);
  if (key.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "team name must not be empty");
  }
  auto [it, inserted] = index_.try_emplace(key, teams_.size());
  if (inserted) teams_.push_back(std::move(key));
  return it->second;
}

std::optional<TeamIndex> MatchList::find_team(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

void check_result(double score_a, double score_b, std::optional<std::uint32_t> day) {
  for (double s : {score_a, score_b}) {
    if (!std::isfinite(s) || s < 0.0) {
      throw Error(ErrorKind::kInvalidArgument,
                  "scores must be finite and nonnegative");
    }
  }
  if (day && *day == 0) {
    throw Error(ErrorKind::kInvalidArgument, "day must be a positive integer");
  }
}

}  // namespace

void MatchList::add_match(const Match& match) {
  if (match.team_a >= teams_.size() || match.team_b >= teams_.size()) {
    throw Error(ErrorKind::kInvalidArgument, "match references an unknown team");
  }
  if (match.team_a == match.team_b) {
    throw Error(ErrorKind::kInvalidArgument,
                "team '" + teams_[match.team_a] + "' cannot play itself");
  }
  check_result(match.score_a, match.score_b, match.day);
  matches_.push_back(match);
}

void MatchList::add_match(std::string_view team_a, std::string_view team_b,
                          double score_a, double score_b,
                          std::optional<std::uint32_t> day) {
  if (team_a == team_b) {
    throw Error(ErrorKind::kInvalidArgument,
                "team '" + std::string(team_a) + "' cannot play itself");
  }
  check_result(score_a, score_b, day);
  const TeamIndex a = add_team(team_a);
  const TeamIndex b = add_team(team_b);
  add_match(Match{day, a, b, score_a, score_b});
}

std::uint32_t MatchList::effective_day(std::size_t match_index) const {
  const auto& m = matches_.at(match_index);
  return m.day ? *m.day : static_cast<std::uint32_t>(match_index + 1);
}

bool MatchList::fully_dated() const noexcept {
  return !matches_.empty() &&
         std::all_of(matches_.begin(), matches_.end(),
                     [](const Match& m) { return m.day.has_value(); });
}

MatchGraph::MatchGraph(std::size_t n)
    : n_(n), adjacency_(n * n, 0), degrees_(n, 0) {}

void MatchGraph::add_edge(TeamIndex i, TeamIndex j, std::int64_t count) {
  if (i >= n_ || j >= n_ || i == j) {
    throw Error(ErrorKind::kInvalidArgument, "invalid match graph edge");
  }
  adjacency_[i * n_ + j] += count;
  adjacency_[j * n_ + i] += count;
  degrees_[i] += count;
  degrees_[j] += count;
}

linalg::DenseMatrix MatchGraph::laplacian() const {
  linalg::DenseMatrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      m(i, j) = static_cast<double>((i == j ? degrees_[i] : 0) -
                                    adjacency(i, j));
    }
  }
  return m;
}

linalg::DenseMatrix MatchGraph::signless_laplacian() const {
  linalg::DenseMatrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      m(i, j) = static_cast<double>((i == j ? degrees_[i] : 0) +
                                    adjacency(i, j));
    }
  }
  return m;
}

linalg::DenseMatrix MatchGraph::adjacency_matrix() const {
  linalg::DenseMatrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      m(i, j) = static_cast<double>(adjacency(i, j));
    }
  }
  return m;
}

std::vector<TeamIndex> MatchGraph::isolated_teams() const {
  std::vector<TeamIndex> out;
  for (std::size_t i = 0; i < n_; ++i) {
    if (degrees_[i] == 0) out.push_back(i);
  }
  return out;
}

Schedule::Schedule(std::size_t n, std::vector<Matching> days)
    : n_(n), days_(std::move(days)) {
  if (n_ < 2 || n_ % 2 != 0) {
    throw Error(ErrorKind::kOddTeamCount,
                "a round robin needs an even number of teams");
  }
  std::set<Pairing> seen;
  for (std::size_t d = 0; d < days_.size(); ++d) {
    const auto& day = days_[d];
    std::vector<bool> used(n_, false);
    if (day.size() != n_ / 2) {
      throw Error(ErrorKind::kInvalidArgument,
                  "day " + std::to_string(d + 1) + " is not a perfect matching");
    }
    for (auto [i, j] : day) {
      if (i >= n_ || j >= n_ || i == j || used[i] || used[j]) {
        throw Error(ErrorKind::kInvalidArgument,
                    "day " + std::to_string(d + 1) +
                        " is not a perfect matching");
      }
      used[i] = used[j] = true;
      if (!seen.insert(std::minmax(i, j)).second) {
        throw Error(ErrorKind::kInvalidArgument,
                    "pair repeated on day " + std::to_string(d + 1));
      }
    }
  }
}

MatchGraph build_match_graph(const MatchList& matches) {
  MatchGraph g(matches.team_count());
  for (const auto& m : matches.matches()) g.add_edge(m.team_a, m.team_b);
  return g;
}

std::size_t component_count(const MatchGraph& graph) {
  const std::size_t n = graph.size();
  std::vector<bool> seen(n, false);
  std::size_t components = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ++components;
    seen[start] = true;
    std::queue<std::size_t> frontier;
    frontier.push(start);
    while (!frontier.empty()) {
      const std::size_t i = frontier.front();
      frontier.pop();
      for (std::size_t j = 0; j < n; ++j) {
        if (graph.adjacency(i, j) > 0 && !seen[j]) {
          seen[j] = true;
          frontier.push(j);
        }
      }
    }
  }
  return components;
}

bool is_connected(const MatchGraph& graph) {
  return component_count(graph) <= 1;
}

std::optional<Bipartition> bipartition(const MatchGraph& graph) {
  if (!is_connected(graph)) {
    throw Error(ErrorKind::kDisconnectedGraph,
                "bipartition needs a connected match graph");
  }
  auto [colour, odd] = two_colour(graph);
  if (odd) return std::nullopt;
  Bipartition parts;
  for (std::size_t i = 0; i < colour.size(); ++i) {
    // Colouring starts at team 0 with colour 0, so u holds the lowest index.
    (colour[i] == 0 ? parts.u : parts.v).push_back(i);
  }
  return parts;
}

bool has_odd_cycle(const MatchGraph& graph) { return two_colour(graph).second; }

Schedule round_robin_schedule(std::size_t n) {
  if (n % 2 != 0) {
    throw Error(ErrorKind::kOddTeamCount,
                "round robin needs an even team count, got " + std::to_string(n));
  }
  if (n < 4) {
    throw Error(ErrorKind::kInvalidArgument, "round robin needs at least 4 teams");
  }
  std::vector<TeamIndex> seats(n);
  std::iota(seats.begin(), seats.end(), TeamIndex{0});
  std::vector<Matching> days;
  days.reserve(n - 1);
  for (std::size_t d = 0; d + 1 < n; ++d) {
    Matching day;
    for (std::size_t s = 0; s < n / 2; ++s) {
      day.emplace_back(seats[s], seats[n - 1 - s]);
    }
    days.push_back(std::move(day));
    std::rotate(seats.begin() + 1, seats.end() - 1, seats.end());
  }
  return Schedule(n, std::move(days));
}

Schedule shuffled_round_robin(std::size_t n, std::uint64_t seed) {
  Schedule base = round_robin_schedule(n);
  std::mt19937_64 rng(seed);
  std::vector<TeamIndex> label(n);
  std::iota(label.begin(), label.end(), TeamIndex{0});
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<Matching> days = base.days();
  std::shuffle(days.begin(), days.end(), rng);
  for (auto& day : days) {
    for (auto& [i, j] : day) {
      i = label[i];
      j = label[j];
    }
  }
  return Schedule(n, std::move(days));
}

std::size_t days_to_connected(const Schedule& schedule) {
  for (std::size_t k = 1; k <= schedule.day_count(); ++k) {
    if (is_connected(union_of_days(schedule.team_count(), schedule.days(), k))) {
      return k;
    }
  }
  throw Error(ErrorKind::kNeverConnected, "schedule never connects the teams");
}

std::size_t days_to_nonbipartite(const Schedule& schedule) {
  for (std::size_t k = 1; k <= schedule.day_count(); ++k) {
    if (has_odd_cycle(
            union_of_days(schedule.team_count(), schedule.days(), k))) {
      return k;
    }
  }
  throw Error(ErrorKind::kNeverNonBipartite,
              "schedule never produces an odd cycle");
}

DayMilestones day_milestones(const MatchList& matches) {
  std::map<std::uint32_t, std::vector<std::size_t>> by_day;
  for (std::size_t k = 0; k < matches.match_count(); ++k) {
    by_day[matches.effective_day(k)].push_back(k);
  }
  DayMilestones out;
  MatchGraph g(matches.team_count());
  for (const auto& [day, indices] : by_day) {
    for (std::size_t k : indices) {
      const auto& m = matches.matches()[k];
      g.add_edge(m.team_a, m.team_b);
    }
    if (!out.connected && is_connected(g)) out.connected = day;
    if (!out.nonbipartite && has_odd_cycle(g)) out.nonbipartite = day;
    if (out.connected && out.nonbipartite) break;
  }
  return out;
}

}  // namespace rankforge::competition
