#include "rankforge/pipeline.hpp"

#include <cmath>
#include <string>

#include "rankforge/error.hpp"

namespace rankforge {

Method parse_method(std::string_view text) {
  if (text == "massey") return Method::kMassey;
  if (text == "keener") return Method::kKeener;
  if (text == "odm") return Method::kOdm;
  if (text == "elo") return Method::kElo;
  throw Error(ErrorKind::kInvalidArgument,
              "unknown method '" + std::string(text) +
                  "' (expected massey, keener, odm or elo)");
}

alt::Smoothing parse_smoothing(std::string_view text) {
  if (text == "raw") return alt::Smoothing::kRaw;
  if (text == "laplace") return alt::Smoothing::kLaplace;
  throw Error(ErrorKind::kInvalidArgument,
              "unknown smoothing '" + std::string(text) +
                  "' (expected raw or laplace)");
}

OutputFormat parse_output_format(std::string_view text) {
  if (text == "json") return OutputFormat::kJson;
  if (text == "csv") return OutputFormat::kCsv;
  if (text == "table") return OutputFormat::kTable;
  throw Error(ErrorKind::kInvalidArgument,
              "unknown output format '" + std::string(text) +
                  "' (expected json, csv or table)");
}

const char* to_string(Method method) {
  switch (method) {
    case Method::kMassey: return "massey";
    case Method::kKeener: return "keener";
    case Method::kOdm: return "odm";
    case Method::kElo: return "elo";
  }
  return "?";
}

const char* to_string(alt::Smoothing smoothing) {
  return smoothing == alt::Smoothing::kRaw ? "raw" : "laplace";
}

const char* to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson: return "json";
    case OutputFormat::kCsv: return "csv";
    case OutputFormat::kTable: return "table";
  }
  return "?";
}

void RunConfig::validate() const {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(tol)) {
    throw Error(ErrorKind::kInvalidArgument, "--tol must be positive");
  }
  if (max_iter == 0) {
    throw Error(ErrorKind::kInvalidArgument, "--max-iter must be positive");
  }
  if (!positive(elo.kappa) || !positive(elo.zeta)) {
    throw Error(ErrorKind::kInvalidArgument, "--kappa and --zeta must be positive");
  }
  if (!std::isfinite(elo.initial_rating)) {
    throw Error(ErrorKind::kInvalidArgument, "--init-rating must be finite");
  }
}

MethodResult rate_matches(const competition::MatchList& matches,
                          const RunConfig& config) {
  config.validate();
  if (matches.team_count() < 2) {
    throw Error(ErrorKind::kInvalidArgument, "rating needs at least two teams");
  }
  switch (config.method) {
    case Method::kMassey:
      return massey::rate(matches);
    case Method::kKeener:
      return alt::keener_rating(alt::strength_matrix(matches, config.smoothing),
                                config.tol, config.max_iter);
    case Method::kOdm:
      return alt::odm_rating(alt::strength_matrix(matches, config.smoothing),
                             config.tol, config.max_iter);
    case Method::kElo:
      return alt::elo_run(matches, config.elo);
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown method");
}

}  // namespace rankforge
