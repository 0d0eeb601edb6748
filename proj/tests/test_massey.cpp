#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "rankforge/error.hpp"
#include "rankforge/massey.hpp"

using namespace rankforge;
using linalg::DenseMatrix;
using linalg::DenseVector;
using testing::max_abs_diff;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::kInternalMismatch;
}

}  // namespace

TEST_CASE("incidence of the worked example") {
  const auto inc = massey::build_incidence(testing::worked_example());
  CHECK(inc.x == DenseMatrix(4, 4, {1, 0, -1, 0, 1, 0, 0, -1, 0, 1, -1, 0, 0, 1, 0, -1}));
  CHECK(inc.y == DenseVector{2, 3, 0, 1});
}

TEST_CASE("incidence orientation") {
  competition::MatchList one;
  one.add_match("A", "B", 1, 0);
  const auto inc = massey::build_incidence(one);
  CHECK(inc.x == DenseMatrix(1, 2, {1, -1}));
  CHECK(inc.y == DenseVector{1});

  competition::MatchList reversed;
  reversed.add_match("A", "B", 0, 4);
  CHECK(massey::build_incidence(reversed).x == DenseMatrix(1, 2, {-1, 1}));

  // A draw listed with the higher-index team first still gives +1 to the
  // lower registry index.
  competition::MatchList draw;
  draw.add_team("B");
  draw.add_team("C");
  draw.add_match("C", "B", 1, 1);
  CHECK(massey::build_incidence(draw).x == DenseMatrix(1, 2, {1, -1}));
}

TEST_CASE("system of the worked example") {
  const auto sys = massey::build_system(testing::worked_example());
  CHECK(sys.m == DenseMatrix(4, 4, {2, 0, -1, -1, 0, 2, -1, -1, -1, -1, 2, 0, -1, -1, 0, 2}));
  CHECK(sys.p == DenseVector{5, 1, -2, -4});
  CHECK(sys.points_for == DenseVector{5, 3, 1, 1});
  CHECK(sys.points_against == DenseVector{0, 2, 3, 5});
  CHECK(sys.draws == 1);
}

TEST_CASE("isolated team gives a zero row and column") {
  auto list = testing::worked_example();
  list.add_team("E");
  const auto sys = massey::build_system(list);
  for (std::size_t k = 0; k < 5; ++k) {
    CHECK(sys.m(4, k) == 0.0);
    CHECK(sys.m(k, 4) == 0.0);
  }
  CHECK(kind_of([&] { massey::solve_ratings(sys); }) == ErrorKind::kDisconnectedGraph);
  try {
    massey::rate(list);
    FAIL("expected DisconnectedGraph");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("E") != std::string::npos);
  }
}

TEST_CASE("system invariants on random lists") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const auto list = testing::random_connected(rng, 7, 15);
    const auto sys = massey::build_system(list);
    const DenseVector e(list.team_count(), 1.0);
    CHECK(linalg::norm_inf(linalg::multiply(sys.x, e)) == 0.0);
    CHECK(std::abs(linalg::sum(sys.p)) < linalg::kTolResidual);
    for (double v : sys.y) CHECK(v >= 0.0);
    for (std::size_t i = 0; i < list.team_count(); ++i) {
      CHECK(sys.p[i] == sys.points_for[i] - sys.points_against[i]);
      for (std::size_t j = 0; j < list.team_count(); ++j) {
        const double expected = (i == j ? static_cast<double>(sys.graph.degree(i)) : 0.0) -
                                static_cast<double>(sys.graph.adjacency(i, j));
        CHECK(sys.m(i, j) == expected);
      }
    }
  }
}

TEST_CASE("solve_ratings on the worked example") {
  const auto sys = massey::build_system(testing::worked_example());
  const auto r = massey::solve_ratings(sys);
  CHECK(max_abs_diff(r, DenseVector{1.75, -0.25, -0.25, -1.25}) < 1e-12);
}

TEST_CASE("solve_ratings edge cases") {
  competition::MatchList split;
  split.add_match("A", "B", 1, 0);
  split.add_match("C", "D", 1, 0);
  CHECK(kind_of([&] { massey::solve_ratings(massey::build_system(split)); }) ==
        ErrorKind::kDisconnectedGraph);

  std::mt19937_64 rng(4);
  const auto rr = testing::full_round_robin(rng, 4);
  const auto sys = massey::build_system(rr);
  const auto r = massey::solve_ratings(sys);
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(r[i] - sys.p[i] / 4.0) < 1e-12);
}

TEST_CASE("solve_ratings satisfies M r = p and is row-choice invariant") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const auto sys = massey::build_system(testing::random_connected(rng, 8, 20));
    const auto r = massey::solve_ratings(sys);
    CHECK(linalg::residual_inf(sys.m, r, sys.p) <
          linalg::kTolResidual * (1.0 + linalg::norm_inf(sys.p)));
    CHECK(std::abs(linalg::sum(r)) < linalg::kTolResidual);
    for (std::size_t row = 0; row < sys.graph.size(); ++row) {
      CHECK(max_abs_diff(r, massey::solve_ratings_replacing(sys, row)) < 1e-9);
    }
  }
}

TEST_CASE("ratings agree with the minimum-norm least-squares oracle") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const auto sys = massey::build_system(testing::random_connected(rng, 5, 8));
    const auto oracle = testing::min_norm_least_squares(sys.x, sys.y);
    CHECK(max_abs_diff(massey::solve_ratings(sys), oracle) < 1e-8);
  }
}

TEST_CASE("common score offsets leave ratings unchanged") {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 30; ++trial) {
    const auto list = testing::random_connected(rng, 6, 10);
    competition::MatchList shifted;
    for (const auto& t : list.teams()) shifted.add_team(t);
    for (auto m : list.matches()) {
      m.score_a += 7.5;
      m.score_b += 7.5;
      shifted.add_match(m);
    }
    CHECK(max_abs_diff(massey::solve_ratings(massey::build_system(list)),
                       massey::solve_ratings(massey::build_system(shifted))) < 1e-12);
  }
}

TEST_CASE("decompose_rating") {
  const auto sys = massey::build_system(testing::worked_example());
  const auto r = massey::solve_ratings(sys);
  const auto split = massey::decompose_rating(sys, r);
  CHECK(max_abs_diff(split.opponents, DenseVector{-0.75, -0.75, 0.75, 0.75}) < 1e-12);
  CHECK(max_abs_diff(split.spread, DenseVector{2.5, 0.5, -1.0, -2.0}) < 1e-12);

  competition::MatchList two;
  two.add_match("A", "B", 3, 0);
  const auto sys2 = massey::build_system(two);
  const auto r2 = massey::solve_ratings(sys2);
  CHECK(max_abs_diff(r2, DenseVector{1.5, -1.5}) < 1e-12);
  const auto split2 = massey::decompose_rating(sys2, r2);
  CHECK(max_abs_diff(split2.opponents, DenseVector{-1.5, 1.5}) < 1e-12);
  CHECK(max_abs_diff(split2.spread, DenseVector{3, -3}) < 1e-12);

  competition::MatchList draws;
  draws.add_match("A", "B", 0, 0);
  draws.add_match("B", "C", 0, 0);
  draws.add_match("C", "A", 0, 0);
  const auto sys0 = massey::build_system(draws);
  const auto r0 = massey::solve_ratings(sys0);
  const auto split0 = massey::decompose_rating(sys0, r0);
  CHECK(linalg::norm_inf(r0) == 0.0);
  CHECK(linalg::norm_inf(split0.opponents) == 0.0);
  CHECK(linalg::norm_inf(split0.spread) == 0.0);

  auto idle = testing::worked_example();
  idle.add_team("E");
  const auto sys_idle = massey::build_system(idle);
  CHECK(kind_of([&] { massey::decompose_rating(sys_idle, DenseVector(5, 0.0)); }) ==
        ErrorKind::kZeroGames);
}

TEST_CASE("offense_defense on the worked example") {
  const auto sys = massey::build_system(testing::worked_example());
  const auto r = massey::solve_ratings(sys);
  const auto od = massey::offense_defense(sys, r);
  CHECK(max_abs_diff(od.offense, DenseVector{1.875, 0.875, -0.125, -0.125}) < 1e-12);
  CHECK(max_abs_diff(od.defense, DenseVector{-0.125, -1.125, -0.125, -1.125}) < 1e-12);
  REQUIRE(od.part_signs);
  CHECK(*od.part_signs == DenseVector{1, 1, -1, -1});

  // v^T (D r - f) = 0
  double vq = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    vq += (*od.part_signs)[i] *
          (static_cast<double>(sys.graph.degree(i)) * r[i] - sys.points_for[i]);
  }
  CHECK(std::abs(vq) < 1e-12);
}

TEST_CASE("offense_defense on a cyclic triangle") {
  competition::MatchList tri;
  tri.add_match("A", "B", 1, 0);
  tri.add_match("B", "C", 1, 0);
  tri.add_match("C", "A", 1, 0);
  const auto sys = massey::build_system(tri);
  const auto r = massey::solve_ratings(sys);
  CHECK(linalg::norm_inf(r) < 1e-12);
  const auto od = massey::offense_defense(sys, r);
  CHECK_FALSE(od.part_signs);
  // (D + A) d = -f with D = 2I, A = J - I, f = (1,1,1): 4 d = -1.
  CHECK(max_abs_diff(od.defense, DenseVector{-0.25, -0.25, -0.25}) < 1e-12);
  CHECK(max_abs_diff(od.offense, DenseVector{0.25, 0.25, 0.25}) < 1e-12);
}

TEST_CASE("offense_defense identities on random instances") {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 100; ++trial) {
    const auto list = trial % 2 ? testing::random_bipartite(rng, 8, 6)
                                : testing::random_connected(rng, 8, 14);
    const auto sys = massey::build_system(list);
    const auto r = massey::solve_ratings(sys);
    const auto od = massey::offense_defense(sys, r);
    DenseVector sum(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) sum[i] = od.offense[i] + od.defense[i];
    CHECK(max_abs_diff(sum, r) < 1e-9);
    // Original system (D + A) d = D r - f holds whichever path was taken.
    DenseVector q(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
      q[i] = static_cast<double>(sys.graph.degree(i)) * r[i] - sys.points_for[i];
    }
    CHECK(linalg::residual_inf(sys.graph.signless_laplacian(), od.defense, q) <
          1e-9 * (1.0 + linalg::norm_inf(q)));
    if (od.part_signs) {
      double vd = 0.0;
      for (std::size_t i = 0; i < r.size(); ++i) vd += (*od.part_signs)[i] * od.defense[i];
      CHECK(std::abs(vd) < 1e-9);
    }
  }
}

TEST_CASE("edge_flows") {
  const auto sys = massey::build_system(testing::worked_example());
  const auto r = massey::solve_ratings(sys);
  const auto flows = massey::edge_flows(sys, r);
  REQUIRE(flows.size() == 4);
  const std::vector<std::tuple<std::size_t, std::size_t, double>> expected = {
      {0, 2, 2.0}, {0, 3, 3.0}, {1, 2, 0.0}, {1, 3, 1.0}};
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(flows[k].i == std::get<0>(expected[k]));
    CHECK(flows[k].j == std::get<1>(expected[k]));
    CHECK(std::abs(flows[k].flow - std::get<2>(expected[k])) < 1e-12);
  }
  // Kirchhoff at A: outgoing current equals its supply p_A.
  CHECK(std::abs(flows[0].flow + flows[1].flow - sys.p[0]) < 1e-12);
}

TEST_CASE("katz_rating") {
  const DenseVector beta{3, -1, 2};
  const DenseMatrix a3(3, 3, {0, 1, 1, 1, 0, 1, 1, 1, 0});
  CHECK(max_abs_diff(massey::katz_rating(a3, 0.0, beta), beta) == 0.0);

  const DenseMatrix a2(2, 2, {0, 1, 1, 0});
  CHECK(max_abs_diff(massey::katz_rating(a2, 0.5, DenseVector{1, 0}),
                     DenseVector{4.0 / 3.0, 2.0 / 3.0}) < 1e-12);

  // Every team played k = 2 games; alpha = 1/k hits the eigenvalue k of A.
  const auto sys = massey::build_system(testing::worked_example());
  DenseVector half_p(4);
  for (std::size_t i = 0; i < 4; ++i) half_p[i] = sys.p[i] / 2.0;
  CHECK(kind_of([&] {
          massey::katz_rating(sys.graph.adjacency_matrix(), 0.5, half_p);
        }) == ErrorKind::kSingularMatrix);
}

TEST_CASE("spectral_gap_bound") {
  const auto sys = massey::build_system(testing::worked_example());
  const auto r = massey::solve_ratings(sys);
  const auto b = massey::spectral_gap_bound(sys, r);
  CHECK(std::abs(b.lambda2 - 2.0) < 1e-8);
  CHECK(std::abs(b.lhs - std::sqrt(0.625)) < 1e-9);
  CHECK(std::abs(b.rhs - std::sqrt(46.0) * 2.0 / 8.0) < 1e-9);
  CHECK(b.lhs <= b.rhs);

  std::mt19937_64 rng(26);
  const auto full = massey::build_system(testing::full_round_robin(rng, 6));
  const auto bf = massey::spectral_gap_bound(full, massey::solve_ratings(full));
  CHECK(bf.lhs < 1e-9);
  CHECK(std::abs(bf.lambda2 - 6.0) < 1e-8);

  for (int trial = 0; trial < 100; ++trial) {
    const auto s = massey::build_system(testing::random_partial_season(rng, 10, 0.1 * (trial % 10)));
    const auto bound = massey::spectral_gap_bound(s, massey::solve_ratings(s));
    CHECK(bound.lhs <= bound.rhs + 1e-9);
  }

  // Repeated meetings can push lambda_n past n, where the bound no longer holds.
  competition::MatchList repeated;
  for (int k = 0; k < 3; ++k) {
    repeated.add_match("A", "B", 5, 0);
    repeated.add_match("B", "C", 0, 0);
  }
  const auto sr = massey::build_system(repeated);
  const auto br = massey::spectral_gap_bound(sr, massey::solve_ratings(sr));
  CHECK(br.rhs < 0.0);

  competition::MatchList split;
  split.add_match("A", "B", 1, 0);
  split.add_match("C", "D", 1, 0);
  const auto sys_split = massey::build_system(split);
  CHECK(kind_of([&] { massey::spectral_gap_bound(sys_split, DenseVector(4, 0.0)); }) ==
        ErrorKind::kDisconnectedGraph);
}

TEST_CASE("rate assembles the full report") {
  const auto report = massey::rate(testing::worked_example());
  CHECK(report.diagnostics.connected);
  CHECK(report.diagnostics.bipartite);
  CHECK(std::abs(report.diagnostics.lambda2 - 2.0) < 1e-8);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(std::abs(report.r[i] - report.r1[i] - report.r2[i]) < 1e-12);
    CHECK(std::abs(report.r[i] - report.o[i] - report.d[i]) < 1e-12);
  }
  CHECK(report.flows.size() == 4);
}
