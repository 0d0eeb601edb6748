#include "rankforge/csv_io.hpp"

#include <charconv>
#include <cmath>
#include <optional>
#include <vector>

#include "rankforge/error.hpp"

namespace rankforge::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(trim(line.substr(start)));
      return fields;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
}

// Splits into lines, accepting LF or CRLF and a leading UTF-8 BOM.
std::vector<std::string_view> split_lines(std::string_view text) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (line.ends_with('\r')) line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

double parse_real(std::string_view field, std::size_t line, const char* what) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  if (!field.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (field.empty() || ec != std::errc() || ptr != last) {
    throw ParseError(line, std::string("invalid ") + what + " '" +
                               std::string(field) + "'");
  }
  if (!std::isfinite(value)) {
    throw ParseError(line, std::string(what) + " must be finite");
  }
  return value;
}

std::optional<std::uint32_t> parse_day(std::string_view field, std::size_t line) {
  if (field.empty()) return std::nullopt;
  std::uint32_t day = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), day);
  if (ec != std::errc() || ptr != field.data() + field.size() || day == 0) {
    throw ParseError(line, "day must be a positive integer, got '" +
                               std::string(field) + "'");
  }
  return day;
}

bool is_blank(std::string_view line) { return trim(line).empty(); }

}  // namespace

competition::MatchList parse_matches_csv(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty() || is_blank(lines[0])) {
    throw ParseError(1, "missing header 'day,team_a,team_b,score_a,score_b'");
  }
  const auto header = split_fields(lines[0]);
  bool with_day = false;
  if (header == std::vector<std::string_view>{"day", "team_a", "team_b",
                                              "score_a", "score_b"}) {
    with_day = true;
  } else if (header != std::vector<std::string_view>{"team_a", "team_b",
                                                     "score_a", "score_b"}) {
    throw ParseError(1, "expected header 'day,team_a,team_b,score_a,score_b'");
  }

  competition::MatchList matches;
  const std::size_t expected = with_day ? 5 : 4;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const std::size_t line = k + 1;
    if (is_blank(lines[k])) continue;
    const auto fields = split_fields(lines[k]);
    if (fields.size() != expected) {
      throw ParseError(line, "expected " + std::to_string(expected) +
                                 " fields, got " + std::to_string(fields.size()));
    }
    const std::size_t off = with_day ? 1 : 0;
    const auto day = with_day ? parse_day(fields[0], line) : std::nullopt;
    const auto team_a = fields[off];
    const auto team_b = fields[off + 1];
    if (team_a.empty() || team_b.empty()) {
      throw ParseError(line, "team names must not be empty");
    }
    if (team_a == team_b) {
      throw ParseError(line, "team '" + std::string(team_a) + "' cannot play itself");
    }
    const double score_a = parse_real(fields[off + 2], line, "score_a");
    const double score_b = parse_real(fields[off + 3], line, "score_b");
    if (score_a < 0.0 || score_b < 0.0) {
      throw ParseError(line, "scores must be nonnegative");
    }
    matches.add_match(team_a, team_b, score_a, score_b, day);
  }
  return matches;
}

netflow::WeightedDigraph parse_edges_csv(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty() || split_fields(lines[0]) !=
                           std::vector<std::string_view>{"source", "target",
                                                         "weight"}) {
    throw ParseError(1, "expected header 'source,target,weight'");
  }
  netflow::WeightedDigraph g;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const std::size_t line = k + 1;
    if (is_blank(lines[k])) continue;
    const auto fields = split_fields(lines[k]);
    if (fields.size() != 3) {
      throw ParseError(line, "expected 3 fields, got " +
                                 std::to_string(fields.size()));
    }
    if (fields[0].empty() || fields[1].empty()) {
      throw ParseError(line, "node names must not be empty");
    }
    const double weight = parse_real(fields[2], line, "weight");
    if (weight <= 0.0) throw ParseError(line, "weight must be positive");
    g.add_edge(fields[0], fields[1], weight);
  }
  return g;
}

std::string format_number(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

std::string matches_to_csv(const competition::MatchList& matches) {
  std::string out = "day,team_a,team_b,score_a,score_b\n";
  for (const auto& m : matches.matches()) {
    if (m.day) out += std::to_string(*m.day);
    out += ',';
    out += matches.team_name(m.team_a);
    out += ',';
    out += matches.team_name(m.team_b);
    out += ',';
    out += format_number(m.score_a);
    out += ',';
    out += format_number(m.score_b);
    out += '\n';
  }
  return out;
}

}  // namespace rankforge::io
