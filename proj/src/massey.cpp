#include "rankforge/massey.hpp"

#include <cmath>
#include <string>

#include "rankforge/error.hpp"

namespace rankforge::massey {

namespace {

using competition::MatchList;

void require_connected(const MasseySystem& system, const MatchList* matches) {
  if (competition::is_connected(system.graph)) return;
  std::string message = "match graph is disconnected; ratings are undefined";
  const auto isolated = system.graph.isolated_teams();
  if (!isolated.empty()) {
    message += " (teams without games:";
    for (auto i : isolated) {
      message += " ";
      message += matches ? matches->team_name(i) : "#" + std::to_string(i);
    }
    message += ")";
  }
  throw Error(ErrorKind::kDisconnectedGraph, message);
}

void require_length(const MasseySystem& system, const DenseVector& r) {
  if (r.size() != system.graph.size()) {
    throw Error(ErrorKind::kInvalidArgument,
                "rating vector length does not match the team count");
  }
}

double max_diff(const DenseMatrix& a, const DenseMatrix& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    m = std::max(m, std::abs(a.entries()[k] - b.entries()[k]));
  }
  return m;
}

}  // namespace

Incidence build_incidence(const MatchList& matches) {
  const std::size_t n = matches.team_count();
  const std::size_t m = matches.match_count();
  Incidence out{DenseMatrix(m, n), DenseVector(m, 0.0)};
  for (std::size_t k = 0; k < m; ++k) {
    const auto& match = matches.matches()[k];
    auto winner = match.team_a;
    auto loser = match.team_b;
    if (match.score_b > match.score_a ||
        (match.score_a == match.score_b && match.team_b < match.team_a)) {
      std::swap(winner, loser);
    }
    out.x(k, winner) = 1.0;
    out.x(k, loser) = -1.0;
    out.y[k] = std::abs(match.score_a - match.score_b);
  }
  return out;
}

MasseySystem build_system(const MatchList& matches) {
  const std::size_t n = matches.team_count();
  auto incidence = build_incidence(matches);
  auto graph = competition::build_match_graph(matches);

  DenseVector p(n, 0.0);
  DenseVector f(n, 0.0);
  DenseVector a(n, 0.0);
  std::size_t draws = 0;
  for (const auto& match : matches.matches()) {
    const double spread = match.score_a - match.score_b;
    p[match.team_a] += spread;
    p[match.team_b] -= spread;
    f[match.team_a] += match.score_a;
    f[match.team_b] += match.score_b;
    a[match.team_a] += match.score_b;
    a[match.team_b] += match.score_a;
    if (match.score_a == match.score_b) ++draws;
  }
  DenseMatrix m = graph.laplacian();

  const DenseMatrix xt = incidence.x.transpose();
  const DenseMatrix m_check = linalg::multiply(xt, incidence.x);
  const DenseVector p_check = linalg::multiply(xt, incidence.y);
  double p_err = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    p_err = std::max(p_err, std::abs(p[i] - p_check[i]));
    // p = f - a by construction of both accumulators.
    p_err = std::max(p_err, std::abs(p[i] - (f[i] - a[i])));
  }
  if (max_diff(m, m_check) > linalg::kTolResidual ||
      p_err > linalg::kTolResidual * (1.0 + linalg::norm_inf(p))) {
    throw Error(ErrorKind::kInternalMismatch,
                "direct and X^T X / X^T y constructions disagree");
  }

  return MasseySystem{std::move(incidence.x), std::move(incidence.y),
                      std::move(m),          std::move(p),
                      std::move(f),          std::move(a),
                      std::move(graph),      draws};
}

DenseVector solve_ratings_replacing(const MasseySystem& system,
                                    std::size_t row) {
  require_connected(system, nullptr);
  const std::size_t n = system.graph.size();
  if (row >= n) {
    throw Error(ErrorKind::kInvalidArgument, "replaced row out of range");
  }
  const DenseVector ones(n, 1.0);
  const DenseMatrix m_hat = system.m.with_row(row, ones);
  DenseVector p_hat = system.p;
  p_hat[row] = 0.0;
  DenseVector r = linalg::solve_dense(m_hat, p_hat);
  if (linalg::residual_inf(system.m, r, system.p) >
      linalg::kTolResidual * (1.0 + linalg::norm_inf(system.p))) {
    throw Error(ErrorKind::kInternalMismatch,
                "perturbed solution does not satisfy M r = p");
  }
  return r;
}

DenseVector solve_ratings(const MasseySystem& system) {
  if (system.graph.size() == 0) {
    throw Error(ErrorKind::kInvalidArgument, "no teams to rate");
  }
  return solve_ratings_replacing(system, system.graph.size() - 1);
}

RatingSplit decompose_rating(const MasseySystem& system, const DenseVector& r) {
  require_length(system, r);
  const auto& g = system.graph;
  const std::size_t n = g.size();
  RatingSplit out{DenseVector(n, 0.0), DenseVector(n, 0.0)};
  for (std::size_t i = 0; i < n; ++i) {
    if (g.degree(i) == 0) {
      throw Error(ErrorKind::kZeroGames,
                  "team #" + std::to_string(i) + " has played no games");
    }
    const double deg = static_cast<double>(g.degree(i));
    double opp = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      opp += static_cast<double>(g.adjacency(i, j)) * r[j];
    }
    out.opponents[i] = opp / deg;
    out.spread[i] = system.p[i] / deg;
  }
  return out;
}

OffenseDefense offense_defense(const MasseySystem& system,
                               const DenseVector& r) {
  require_connected(system, nullptr);
  require_length(system, r);
  const auto& g = system.graph;
  const std::size_t n = g.size();

  DenseMatrix nmat = g.signless_laplacian();
  DenseVector q(n);
  for (std::size_t i = 0; i < n; ++i) {
    q[i] = static_cast<double>(g.degree(i)) * r[i] - system.points_for[i];
  }

  OffenseDefense out;
  if (auto parts = competition::bipartition(g)) {
    DenseVector v(n, 0.0);
    for (auto i : parts->u) v[i] = 1.0;
    for (auto i : parts->v) v[i] = -1.0;
    nmat = nmat.with_row(n - 1, v);
    q[n - 1] = 0.0;
    out.part_signs = std::move(v);
  }
  out.defense = linalg::solve_dense(nmat, q);
  out.offense.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.offense[i] = r[i] - out.defense[i];
  return out;
}

std::vector<EdgeFlow> edge_flows(const MasseySystem& system,
                                 const DenseVector& r) {
  require_length(system, r);
  const auto& g = system.graph;
  std::vector<EdgeFlow> flows;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      const auto count = g.adjacency(i, j);
      if (count > 0) {
        flows.push_back({i, j, static_cast<double>(count) * (r[i] - r[j])});
      }
    }
  }
  return flows;
}

DenseVector katz_rating(const DenseMatrix& a, double alpha,
                        const DenseVector& beta) {
  if (!a.square() || beta.size() != a.rows()) {
    throw Error(ErrorKind::kInvalidArgument, "katz_rating shape mismatch");
  }
  DenseMatrix system = DenseMatrix::identity(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) system(i, j) -= alpha * a(i, j);
  }
  return linalg::solve_dense(system, beta);
}

SpectralBound spectral_gap_bound(const MasseySystem& system,
                                 const DenseVector& r) {
  require_connected(system, nullptr);
  require_length(system, r);
  const std::size_t n = system.graph.size();
  if (n < 2) {
    throw Error(ErrorKind::kInvalidArgument, "spectral bound needs two teams");
  }
  const auto eig = linalg::symmetric_eigenvalues(system.m);
  const double lambda2 = eig[1];
  if (lambda2 <= linalg::kTolEig) {
    throw Error(ErrorKind::kDisconnectedGraph,
                "algebraic connectivity is zero");
  }
  const double nn = static_cast<double>(n);
  DenseVector gap(n);
  for (std::size_t i = 0; i < n; ++i) gap[i] = r[i] - system.p[i] / nn;
  return SpectralBound{
      lambda2, linalg::norm2(gap),
      linalg::norm2(system.p) * (nn - lambda2) / (nn * lambda2)};
}

RatingReport rate(const MatchList& matches) {
  if (matches.team_count() < 2) {
    throw Error(ErrorKind::kInvalidArgument, "rating needs at least two teams");
  }
  const MasseySystem system = build_system(matches);
  require_connected(system, &matches);

  RatingReport report;
  report.r = solve_ratings(system);
  auto split = decompose_rating(system, report.r);
  report.r1 = std::move(split.opponents);
  report.r2 = std::move(split.spread);
  auto od = offense_defense(system, report.r);
  report.o = std::move(od.offense);
  report.d = std::move(od.defense);
  report.flows = edge_flows(system, report.r);

  const auto bound = spectral_gap_bound(system, report.r);
  report.diagnostics = Diagnostics{true, od.part_signs.has_value(),
                                   bound.lambda2, bound.lhs, bound.rhs};
  return report;
}

}  // namespace rankforge::massey
