#pragma once

#include <string>
#include <string_view>

#include "rankforge/competition.hpp"
#include "rankforge/netflow.hpp"

namespace rankforge::io {

// Header `day,team_a,team_b,score_a,score_b` (the day column may be omitted
// entirely or left blank per row). Teams are registered in first-appearance
// order. Errors carry 1-based line numbers.
competition::MatchList parse_matches_csv(std::string_view text);

// Header `source,target,weight`.
netflow::WeightedDigraph parse_edges_csv(std::string_view text);

// Inverse of parse_matches_csv for lists whose teams all played.
std::string matches_to_csv(const competition::MatchList& matches);

std::string format_number(double value);

}  // namespace rankforge::io
