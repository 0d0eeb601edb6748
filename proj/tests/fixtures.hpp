// Shared test fixtures and independent oracles. Nothing here may call the
// solver paths it is used to check.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "rankforge/competition.hpp"
#include "rankforge/linalg.hpp"
#include "rankforge/netflow.hpp"

namespace rankforge::testing {

using competition::MatchList;
using linalg::DenseMatrix;
using linalg::DenseVector;

// Teams registered as A, B, C, D; four matches: A-C 2-0, A-D 3-0, B-C 1-1, B-D 2-1.
inline MatchList worked_example() {
  MatchList m;
  for (const char* name : {"A", "B", "C", "D"}) m.add_team(name);
  m.add_match("A", "C", 2, 0);
  m.add_match("A", "D", 3, 0);
  m.add_match("B", "C", 1, 1);
  m.add_match("B", "D", 2, 1);
  return m;
}

inline const char* worked_example_csv() {
  return "day,team_a,team_b,score_a,score_b\n"
         "1,A,C,2,0\n"
         "1,B,D,2,1\n"
         "2,A,D,3,0\n"
         "2,B,C,1,1\n";
}

inline std::string team_label(std::size_t i) { return "T" + std::to_string(i); }

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Random connected match list: a random spanning tree plus extra matches,
// integer scores in [0, max_score].
inline MatchList random_connected(std::mt19937_64& rng, std::size_t max_teams,
                                  std::size_t max_matches, int max_score = 9) {
  const std::size_t n = uniform(rng, 2, max_teams);
  const std::size_t m = uniform(rng, n - 1, std::max(n - 1, max_matches));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 1; i < n; ++i) pairs.emplace_back(uniform(rng, 0, i - 1), i);
  while (pairs.size() < m) {
    const std::size_t a = uniform(rng, 0, n - 1);
    const std::size_t b = uniform(rng, 0, n - 1);
    if (a != b) pairs.emplace_back(a, b);
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  MatchList list;
  for (std::size_t i = 0; i < n; ++i) list.add_team(team_label(i));
  std::uniform_int_distribution<int> score(0, max_score);
  for (auto [a, b] : pairs) {
    if (uniform(rng, 0, 1)) std::swap(a, b);
    list.add_match(competition::Match{std::nullopt, a, b,
                                      static_cast<double>(score(rng)),
                                      static_cast<double>(score(rng))});
  }
  return list;
}

// Random connected bipartite match list (parts of sizes >= 1).
inline MatchList random_bipartite(std::mt19937_64& rng, std::size_t max_teams,
                                  std::size_t extra, int max_score = 9) {
  const std::size_t n = uniform(rng, 2, max_teams);
  std::vector<int> side(n);
  side[0] = 0;
  side[1] = 1;
  for (std::size_t i = 2; i < n; ++i) side[i] = static_cast<int>(uniform(rng, 0, 1));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 1; i < n; ++i) {
    std::vector<std::size_t> other;
    for (std::size_t j = 0; j < i; ++j) {
      if (side[j] != side[i]) other.push_back(j);
    }
    pairs.emplace_back(other[uniform(rng, 0, other.size() - 1)], i);
  }
  for (std::size_t k = 0; k < extra; ++k) {
    const std::size_t a = uniform(rng, 0, n - 1);
    const std::size_t b = uniform(rng, 0, n - 1);
    if (side[a] != side[b]) pairs.emplace_back(a, b);
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  MatchList list;
  for (std::size_t i = 0; i < n; ++i) list.add_team(team_label(i));
  std::uniform_int_distribution<int> score(0, max_score);
  for (auto [a, b] : pairs) {
    list.add_match(competition::Match{std::nullopt, a, b,
                                      static_cast<double>(score(rng)),
                                      static_cast<double>(score(rng))});
  }
  return list;
}

// Connected partial season: each pair meets at most once. A random spanning
// tree plus each remaining pair with probability `density`.
inline MatchList random_partial_season(std::mt19937_64& rng, std::size_t max_teams,
                                       double density = 0.3, int max_score = 9) {
  const std::size_t n = uniform(rng, 2, max_teams);
  std::vector<std::vector<bool>> played(n, std::vector<bool>(n, false));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t j = uniform(rng, 0, i - 1);
    played[i][j] = played[j][i] = true;
    pairs.emplace_back(j, i);
  }
  std::bernoulli_distribution extra(density);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!played[i][j] && extra(rng)) pairs.emplace_back(i, j);
    }
  }
  std::shuffle(pairs.begin(), pairs.end(), rng);
  MatchList list;
  for (std::size_t i = 0; i < n; ++i) list.add_team(team_label(i));
  std::uniform_int_distribution<int> score(0, max_score);
  for (auto [a, b] : pairs) {
    if (uniform(rng, 0, 1)) std::swap(a, b);
    list.add_match(competition::Match{std::nullopt, a, b,
                                      static_cast<double>(score(rng)),
                                      static_cast<double>(score(rng))});
  }
  return list;
}

// Every pair plays exactly once.
inline MatchList full_round_robin(std::mt19937_64& rng, std::size_t n,
                                  int max_score = 9) {
  MatchList list;
  for (std::size_t i = 0; i < n; ++i) list.add_team(team_label(i));
  std::uniform_int_distribution<int> score(0, max_score);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      list.add_match(competition::Match{std::nullopt, i, j,
                                        static_cast<double>(score(rng)),
                                        static_cast<double>(score(rng))});
    }
  }
  return list;
}

// Random digraph whose underlying undirected graph is connected.
inline netflow::WeightedDigraph random_digraph(std::mt19937_64& rng,
                                               std::size_t max_nodes) {
  const std::size_t n = uniform(rng, 2, max_nodes);
  netflow::WeightedDigraph g;
  for (std::size_t i = 0; i < n; ++i) g.add_node(team_label(i));
  std::uniform_real_distribution<double> weight(0.5, 10.0);
  auto link = [&](std::size_t a, std::size_t b) {
    const int mode = static_cast<int>(uniform(rng, 0, 2));
    if (mode != 1) g.add_edge(team_label(a), team_label(b), weight(rng));
    if (mode != 0) g.add_edge(team_label(b), team_label(a), weight(rng));
  };
  for (std::size_t i = 1; i < n; ++i) link(uniform(rng, 0, i - 1), i);
  const std::size_t extra = uniform(rng, 0, n);
  for (std::size_t k = 0; k < extra; ++k) {
    const std::size_t a = uniform(rng, 0, n - 1);
    const std::size_t b = uniform(rng, 0, n - 1);
    if (a != b) link(a, b);
  }
  return g;
}

// Minimum-norm least-squares solution of X r = y for a connected match
// graph: normal equations G = X^T X and b = X^T y formed by explicit loops,
// the rank-one nullspace closed with e e^T, solved by Cholesky, then
// projected onto sum(r) = 0.
inline DenseVector min_norm_least_squares(const DenseMatrix& x,
                                          const DenseVector& y) {
  const std::size_t m = x.rows();
  const std::size_t n = x.cols();
  std::vector<std::vector<double>> g(n, std::vector<double>(n, 1.0));
  std::vector<double> b(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < m; ++k) g[i][j] += x(k, i) * x(k, j);
    }
    for (std::size_t k = 0; k < m; ++k) b[i] += x(k, i) * y[k];
  }
  // Cholesky G = L L^T.
  std::vector<std::vector<double>> l(n, std::vector<double>(n, 0.0));
  for (std::size_t j = 0; j < n; ++j) {
    double diag = g[j][j];
    for (std::size_t k = 0; k < j; ++k) diag -= l[j][k] * l[j][k];
    l[j][j] = std::sqrt(diag);
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = g[i][j];
      for (std::size_t k = 0; k < j; ++k) s -= l[i][k] * l[j][k];
      l[i][j] = s / l[j][j];
    }
  }
  std::vector<double> z(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = b[i];
    for (std::size_t k = 0; k < i; ++k) s -= l[i][k] * z[k];
    z[i] = s / l[i][i];
  }
  DenseVector r(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = z[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= l[k][i] * r[k];
    r[i] = s / l[i][i];
  }
  double mean = 0.0;
  for (double v : r) mean += v;
  mean /= static_cast<double>(n);
  for (double& v : r) v -= mean;
  return r;
}

inline double max_abs_diff(const DenseVector& a, const DenseVector& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace rankforge::testing
