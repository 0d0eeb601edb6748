#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rankforge/competition.hpp"
#include "rankforge/linalg.hpp"

namespace rankforge::massey {

using linalg::DenseMatrix;
using linalg::DenseVector;

struct Incidence {
  DenseMatrix x;  // m x n, one +1 (winner) and one -1 (loser) per row
  DenseVector y;  // m absolute margins
};

// Least-squares system for a set of matches. M = X^T X = D - A and
// p = X^T y = f - a.
struct MasseySystem {
  DenseMatrix x;
  DenseVector y;
  DenseMatrix m;
  DenseVector p;
  DenseVector points_for;
  DenseVector points_against;
  competition::MatchGraph graph;
  std::size_t draws = 0;
};

struct RatingSplit {
  DenseVector opponents;  // r1: mean rating of opponents faced
  DenseVector spread;     // r2: mean point spread
};

struct OffenseDefense {
  DenseVector offense;
  DenseVector defense;
  // Present when the match graph is bipartite and the perturbed system was
  // used; holds +1 on the first part and -1 on the second.
  std::optional<DenseVector> part_signs;
};

struct EdgeFlow {
  competition::TeamIndex i;
  competition::TeamIndex j;
  double flow;  // A_ij (r_i - r_j), positive when current runs i -> j
};

struct SpectralBound {
  double lambda2;
  double lhs;  // ||r - p/n||
  double rhs;  // ||p|| (n - lambda2) / (n lambda2)
};

struct Diagnostics {
  bool connected = false;
  bool bipartite = false;
  double lambda2 = 0.0;
  double bound_lhs = 0.0;
  double bound_rhs = 0.0;
};

struct RatingReport {
  DenseVector r;
  DenseVector r1;
  DenseVector r2;
  DenseVector o;
  DenseVector d;
  std::vector<EdgeFlow> flows;
  Diagnostics diagnostics;
};

// Draws put +1 on the team with the lower registry index.
Incidence build_incidence(const competition::MatchList& matches);

// Accumulates M and p match by match and cross-checks them against X^T X and
// X^T y; a disagreement raises InternalMismatch.
MasseySystem build_system(const competition::MatchList& matches);

// Solves M r = p with the last row replaced by all ones (and the last entry
// of p by zero), which pins sum(r) = 0.
DenseVector solve_ratings(const MasseySystem& system);

// Same, replacing row `row` instead of the last one. Any row gives the same r
// on a connected graph.
DenseVector solve_ratings_replacing(const MasseySystem& system,
                                    std::size_t row);

RatingSplit decompose_rating(const MasseySystem& system, const DenseVector& r);

// (D + A) d = D r - f, then o = r - d. Bipartite graphs make D + A singular;
// the last row is then swapped for the +1/-1 part indicator.
OffenseDefense offense_defense(const MasseySystem& system, const DenseVector& r);

std::vector<EdgeFlow> edge_flows(const MasseySystem& system,
                                 const DenseVector& r);

// Solves (I - alpha A) r = beta.
DenseVector katz_rating(const DenseMatrix& a, double alpha,
                        const DenseVector& beta);

SpectralBound spectral_gap_bound(const MasseySystem& system,
                                 const DenseVector& r);

// Full pipeline: ratings, both decompositions, flows and diagnostics.
RatingReport rate(const competition::MatchList& matches);

}  // namespace rankforge::massey
