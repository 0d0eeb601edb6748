#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rankforge/linalg.hpp"

namespace rankforge::competition {

using TeamIndex = std::size_t;

struct Match {
  std::optional<std::uint32_t> day;  // unset: ordered by input position
  TeamIndex team_a = 0;
  TeamIndex team_b = 0;
  double score_a = 0.0;
  double score_b = 0.0;

  friend bool operator==(const Match&, const Match&) = default;
};

// Teams are registered in first-appearance order; every vector the library
// produces is indexed by that registry.
class MatchList {
 public:
  MatchList() = default;

  // Returns the index of `name`, registering it when new.
  TeamIndex add_team(std::string_view name);
  std::optional<TeamIndex> find_team(std::string_view name) const;

  // Validates team references, distinctness and score ranges.
  void add_match(const Match& match);
  void add_match(std::string_view team_a, std::string_view team_b,
                 double score_a, double score_b,
                 std::optional<std::uint32_t> day = std::nullopt);

  std::size_t team_count() const noexcept { return teams_.size(); }
  std::size_t match_count() const noexcept { return matches_.size(); }
  const std::vector<std::string>& teams() const noexcept { return teams_; }
  const std::vector<Match>& matches() const noexcept { return matches_; }
  const std::string& team_name(TeamIndex i) const { return teams_.at(i); }

  // Day used for sequencing: the explicit day, else the 1-based position.
  std::uint32_t effective_day(std::size_t match_index) const;
  bool fully_dated() const noexcept;

  friend bool operator==(const MatchList& a, const MatchList& b) {
    return a.teams_ == b.teams_ && a.matches_ == b.matches_;
  }

 private:
  std::vector<std::string> teams_;
  std::unordered_map<std::string, TeamIndex> index_;
  std::vector<Match> matches_;
};

class MatchGraph {
 public:
  explicit MatchGraph(std::size_t n);

  void add_edge(TeamIndex i, TeamIndex j, std::int64_t count = 1);

  std::size_t size() const noexcept { return n_; }
  std::int64_t adjacency(TeamIndex i, TeamIndex j) const {
    return adjacency_[i * n_ + j];
  }
  std::int64_t degree(TeamIndex i) const { return degrees_[i]; }
  const std::vector<std::int64_t>& degrees() const noexcept { return degrees_; }

  // D - A and D + A.
  linalg::DenseMatrix laplacian() const;
  linalg::DenseMatrix signless_laplacian() const;
  linalg::DenseMatrix adjacency_matrix() const;

  std::vector<TeamIndex> isolated_teams() const;

 private:
  std::size_t n_;
  std::vector<std::int64_t> adjacency_;
  std::vector<std::int64_t> degrees_;
};

struct Bipartition {
  std::vector<TeamIndex> u;  // holds the lowest-indexed team
  std::vector<TeamIndex> v;
};

using Pairing = std::pair<TeamIndex, TeamIndex>;
using Matching = std::vector<Pairing>;

// Single round robin: each day a perfect matching over n (even) teams, no
// pair repeated across days.
class Schedule {
 public:
  // Validates the invariants; throws InvalidArgument otherwise.
  Schedule(std::size_t n, std::vector<Matching> days);

  std::size_t team_count() const noexcept { return n_; }
  std::size_t day_count() const noexcept { return days_.size(); }
  const std::vector<Matching>& days() const noexcept { return days_; }

 private:
  std::size_t n_;
  std::vector<Matching> days_;
};

MatchGraph build_match_graph(const MatchList& matches);

bool is_connected(const MatchGraph& graph);
std::size_t component_count(const MatchGraph& graph);

// Two-colouring of a connected graph; nullopt when an odd cycle exists.
// Throws DisconnectedGraph when the graph is not connected.
std::optional<Bipartition> bipartition(const MatchGraph& graph);

// Odd-cycle test valid for disconnected graphs too.
bool has_odd_cycle(const MatchGraph& graph);

// Circle method: team 0 fixed, the others rotate one seat per day.
Schedule round_robin_schedule(std::size_t n);

// Circle schedule with its days shuffled and team labels permuted.
Schedule shuffled_round_robin(std::size_t n, std::uint64_t seed);

// First k (1-based) at which the union of days 1..k is connected.
std::size_t days_to_connected(const Schedule& schedule);
// First k at which the union of days 1..k contains an odd cycle.
std::size_t days_to_nonbipartite(const Schedule& schedule);

struct DayMilestones {
  std::optional<std::uint32_t> connected;
  std::optional<std::uint32_t> nonbipartite;
};

// Same milestones for a dated match list, reported as day labels.
DayMilestones day_milestones(const MatchList& matches);

}  // namespace rankforge::competition
