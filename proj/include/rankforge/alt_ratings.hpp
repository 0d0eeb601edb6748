#pragma once

#include <cstddef>

#include "rankforge/competition.hpp"
#include "rankforge/linalg.hpp"

namespace rankforge::alt {

using linalg::DenseMatrix;
using linalg::DenseVector;

enum class Smoothing { kRaw, kLaplace };

// Pairwise strengths: entry (i, j) is how strong i is against j. Played
// pairs satisfy A_ij + A_ji = 1; unplayed pairs are zero both ways.
class StrengthMatrix {
 public:
  // Validates nonnegativity and the zero diagonal.
  explicit StrengthMatrix(DenseMatrix entries);

  std::size_t size() const noexcept { return entries_.rows(); }
  double operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  const DenseMatrix& matrix() const noexcept { return entries_; }

 private:
  DenseMatrix entries_;
};

struct EloParams {
  double kappa = 25.0;
  double zeta = 400.0;
  double initial_rating = 1500.0;
};

struct KeenerResult {
  DenseVector r;  // positive, sums to 1
  double lambda;
};

struct OdmResult {
  DenseVector offense;
  DenseVector defense;
};

// Throws RawUndefined when raw smoothing meets a played 0-0 pair.
StrengthMatrix strength_matrix(const competition::MatchList& matches,
                               Smoothing smoothing);

// Perron vector by power iteration on A + I (same eigenvector as A, and the
// shift keeps bipartite strength patterns from oscillating).
KeenerResult keener_rating(const StrengthMatrix& a, double tol,
                           std::size_t max_iter);

// Alternating o = A d^-1, d = A^T o^-1 from d = 1, then rescaled so that the
// geometric mean of o is 1.
OdmResult odm_rating(const StrengthMatrix& a, double tol, std::size_t max_iter);

struct EloPair {
  double r_i;
  double r_j;
};

// Expected score of i against j.
double elo_expected(double r_i, double r_j, const EloParams& params);

EloPair elo_update(double r_i, double r_j, double s_ij, const EloParams& params);

// Applies elo_update match by match in (day, input order) sequence.
DenseVector elo_run(const competition::MatchList& matches,
                    const EloParams& params);

}  // namespace rankforge::alt
