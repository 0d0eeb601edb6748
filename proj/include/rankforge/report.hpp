#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "rankforge/competition.hpp"
#include "rankforge/netflow.hpp"
#include "rankforge/pipeline.hpp"

namespace rankforge {

// Serializable result of one CLI subcommand. Values are kept at full
// precision; rounding to 6 decimals happens only in render().
struct Report {
  enum class Kind { kRatings, kSummary };

  Kind kind = Kind::kSummary;
  std::vector<std::string> teams;
  // Per-team columns in output order, e.g. rating, r1, r2, o, d.
  std::vector<std::pair<std::string, linalg::DenseVector>> columns;
  std::map<std::string, double> scalars;
  nlohmann::ordered_json document;

  const linalg::DenseVector* column(const std::string& name) const;
};

Report rate_report(const competition::MatchList& matches, const RunConfig& config);

Report graph_check_report(const competition::MatchList& matches);

Report network_report(const netflow::WeightedDigraph& g, const RunConfig& config);

// Round-robin milestones over `trials` schedules. Trial t uses seed + t; with
// no seed the first trial is the unshuffled circle schedule.
Report simulate_report(std::size_t teams, std::optional<std::uint64_t> seed,
                       std::size_t trials);

std::string render(const Report& report, OutputFormat format);

}  // namespace rankforge
