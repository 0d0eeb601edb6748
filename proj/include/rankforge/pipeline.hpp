#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "rankforge/alt_ratings.hpp"
#include "rankforge/competition.hpp"
#include "rankforge/massey.hpp"

namespace rankforge {

enum class Method { kMassey, kKeener, kOdm, kElo };
enum class OutputFormat { kJson, kCsv, kTable };

Method parse_method(std::string_view text);
alt::Smoothing parse_smoothing(std::string_view text);
OutputFormat parse_output_format(std::string_view text);
const char* to_string(Method method);
const char* to_string(alt::Smoothing smoothing);
const char* to_string(OutputFormat format);

struct RunConfig {
  Method method = Method::kMassey;
  alt::Smoothing smoothing = alt::Smoothing::kLaplace;
  double tol = 1e-10;
  std::size_t max_iter = 100000;
  alt::EloParams elo;
  std::string input_path;
  OutputFormat output = OutputFormat::kJson;
  std::optional<std::uint64_t> seed;

  // Throws InvalidArgument on non-positive tolerances or Elo constants.
  void validate() const;
};

using MethodResult = std::variant<massey::RatingReport, alt::KeenerResult,
                                  alt::OdmResult, linalg::DenseVector>;

// Dispatches to the configured rating method.
MethodResult rate_matches(const competition::MatchList& matches,
                          const RunConfig& config);

}  // namespace rankforge
