#include "rankforge/alt_ratings.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <string>

#include "rankforge/error.hpp"

namespace rankforge::alt {

namespace {

// Every node reaches every other along positive entries.
bool strongly_connected(const DenseMatrix& a) {
  const std::size_t n = a.rows();
  if (n <= 1) return true;
  for (bool transpose : {false, true}) {
    std::vector<bool> seen(n, false);
    std::queue<std::size_t> frontier;
    seen[0] = true;
    frontier.push(0);
    std::size_t reached = 1;
    while (!frontier.empty()) {
      const std::size_t i = frontier.front();
      frontier.pop();
      for (std::size_t j = 0; j < n; ++j) {
        const double w = transpose ? a(j, i) : a(i, j);
        if (w > 0.0 && !seen[j]) {
          seen[j] = true;
          ++reached;
          frontier.push(j);
        }
      }
    }
    if (reached != n) return false;
  }
  return true;
}

double max_abs_diff(const DenseVector& a, const DenseVector& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

void require_tolerances(double tol, std::size_t max_iter) {
  if (!(tol > 0.0) || max_iter == 0) {
    throw Error(ErrorKind::kInvalidArgument,
                "tolerance and iteration cap must be positive");
  }
}

}  // namespace

StrengthMatrix::StrengthMatrix(DenseMatrix entries) : entries_(std::move(entries)) {
  if (!entries_.square()) {
    throw Error(ErrorKind::kInvalidArgument, "strength matrix must be square");
  }
  for (std::size_t i = 0; i < entries_.rows(); ++i) {
    if (entries_(i, i) != 0.0) {
      throw Error(ErrorKind::kInvalidArgument,
                  "strength matrix diagonal must be zero");
    }
    for (std::size_t j = 0; j < entries_.cols(); ++j) {
      if (entries_(i, j) < 0.0) {
        throw Error(ErrorKind::kInvalidArgument,
                    "strength matrix entries must be nonnegative");
      }
    }
  }
}

StrengthMatrix strength_matrix(const competition::MatchList& matches,
                               Smoothing smoothing) {
  const std::size_t n = matches.team_count();
  DenseMatrix scored(n, n);
  const auto graph = competition::build_match_graph(matches);
  for (const auto& m : matches.matches()) {
    scored(m.team_a, m.team_b) += m.score_a;
    scored(m.team_b, m.team_a) += m.score_b;
  }

  DenseMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || graph.adjacency(i, j) == 0) continue;
      const double s_ij = scored(i, j);
      const double total = s_ij + scored(j, i);
      if (smoothing == Smoothing::kLaplace) {
        a(i, j) = (s_ij + 1.0) / (total + 2.0);
      } else if (total > 0.0) {
        a(i, j) = s_ij / total;
      } else {
        throw Error(ErrorKind::kRawUndefined,
                    "raw strength undefined for " + matches.team_name(i) +
                        " vs " + matches.team_name(j) +
                        " (0-0 aggregate); use laplace smoothing");
      }
    }
  }
  return StrengthMatrix(std::move(a));
}

KeenerResult keener_rating(const StrengthMatrix& a, double tol,
                           std::size_t max_iter) {
  require_tolerances(tol, max_iter);
  const std::size_t n = a.size();
  if (n == 0) throw Error(ErrorKind::kInvalidArgument, "empty strength matrix");
  if (!strongly_connected(a.matrix())) {
    throw Error(ErrorKind::kNotIrreducible,
                "strength matrix is reducible; the Perron vector is not unique");
  }

  DenseVector r(n, 1.0 / static_cast<double>(n));
  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    DenseVector next = linalg::multiply(a.matrix(), r);
    for (std::size_t i = 0; i < n; ++i) next[i] += r[i];
    const double total = linalg::sum(next);
    for (double& v : next) v /= total;

    const double step = max_abs_diff(next, r);
    r = std::move(next);
    if (step < tol) {
      const DenseVector ar = linalg::multiply(a.matrix(), r);
      // sum(r) == 1, so this is the Rayleigh-type estimate e^T A r / e^T r.
      const double lambda = linalg::sum(ar);
      double residual = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        residual = std::max(residual, std::abs(ar[i] - lambda * r[i]));
      }
      if (residual < 10.0 * tol) return KeenerResult{std::move(r), lambda};
    }
  }
  throw Error(ErrorKind::kNoConvergence,
              "Keener power iteration did not converge in " +
                  std::to_string(max_iter) + " iterations");
}

OdmResult odm_rating(const StrengthMatrix& a, double tol, std::size_t max_iter) {
  require_tolerances(tol, max_iter);
  const std::size_t n = a.size();
  if (n == 0) throw Error(ErrorKind::kInvalidArgument, "empty strength matrix");
  const DenseMatrix& m = a.matrix();

  auto reciprocal = [](const DenseVector& v) {
    DenseVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = 1.0 / v[i];
    return out;
  };
  auto usable = [](const DenseVector& v) {
    return std::all_of(v.begin(), v.end(),
                       [](double x) { return std::isfinite(x) && x > 0.0; });
  };

  DenseVector o(n, 1.0);
  DenseVector d(n, 1.0);
  bool converged = false;
  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    DenseVector o_next = linalg::multiply(m, reciprocal(d));
    if (!usable(o_next)) break;
    DenseVector d_next = linalg::multiply(m.transpose(), reciprocal(o_next));
    if (!usable(d_next)) break;
    const double step =
        std::max(max_abs_diff(o_next, o), max_abs_diff(d_next, d));
    o = std::move(o_next);
    d = std::move(d_next);
    if (step < tol) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw Error(ErrorKind::kNoConvergence,
                "offense-defense iteration did not converge; the strength "
                "matrix may lack total support");
  }

  double log_mean = 0.0;
  for (double v : o) log_mean += std::log(v);
  const double gauge = std::exp(log_mean / static_cast<double>(n));
  for (double& v : o) v /= gauge;
  for (double& v : d) v *= gauge;
  return OdmResult{std::move(o), std::move(d)};
}

double elo_expected(double r_i, double r_j, const EloParams& params) {
  return 1.0 / (1.0 + std::pow(10.0, -(r_i - r_j) / params.zeta));
}

EloPair elo_update(double r_i, double r_j, double s_ij, const EloParams& params) {
  if (!(s_ij >= 0.0 && s_ij <= 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "Elo score must lie in [0, 1]");
  }
  if (!(params.kappa > 0.0) || !(params.zeta > 0.0)) {
    throw Error(ErrorKind::kInvalidArgument, "Elo kappa and zeta must be positive");
  }
  const double mu_ij = elo_expected(r_i, r_j, params);
  const double gain = params.kappa * (s_ij - mu_ij);
  // mu_ji = 1 - mu_ij and s_ji = 1 - s_ij, so j moves by exactly -gain.
  return EloPair{r_i + gain, r_j - gain};
}

DenseVector elo_run(const competition::MatchList& matches,
                    const EloParams& params) {
  DenseVector ratings(matches.team_count(), params.initial_rating);
  std::vector<std::size_t> order(matches.match_count());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return matches.effective_day(x) < matches.effective_day(y);
  });
  for (std::size_t k : order) {
    const auto& m = matches.matches()[k];
    const double s = m.score_a > m.score_b ? 1.0 : (m.score_a == m.score_b ? 0.5 : 0.0);
    const auto next = elo_update(ratings[m.team_a], ratings[m.team_b], s, params);
    ratings[m.team_a] = next.r_i;
    ratings[m.team_b] = next.r_j;
  }
  return ratings;
}

}  // namespace rankforge::alt
