#include "rankforge/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "rankforge/error.hpp"

namespace rankforge::linalg {

namespace {

void require_finite(std::span<const double> values, const char* what) {
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw Error(ErrorKind::kInvalidArgument,
                  std::string(what) + " contains a non-finite entry");
    }
  }
}

double off_diagonal_mass(const DenseMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j) s += a(i, j) * a(i, j);
    }
  }
  return std::sqrt(s);
}

}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, 0.0) {}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols,
                         std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw Error(ErrorKind::kInvalidArgument,
                "matrix entry count does not match its shape");
  }
  require_finite(entries_, "matrix");
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

double DenseMatrix::max_abs() const noexcept {
  double m = 0.0;
  for (double v : entries_) m = std::max(m, std::abs(v));
  return m;
}

DenseMatrix DenseMatrix::with_row(std::size_t i,
                                  std::span<const double> values) const {
  if (i >= rows_ || values.size() != cols_) {
    throw Error(ErrorKind::kInvalidArgument, "row replacement out of shape");
  }
  require_finite(values, "replacement row");
  DenseMatrix out = *this;
  std::copy(values.begin(), values.end(), out.entries_.begin() + i * cols_);
  return out;
}

DenseVector multiply(const DenseMatrix& a, std::span<const double> x) {
  if (x.size() != a.cols()) {
    throw Error(ErrorKind::kInvalidArgument, "matrix-vector shape mismatch");
  }
  DenseVector y(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto r = a.row(i);
    y[i] = std::inner_product(r.begin(), r.end(), x.begin(), 0.0);
  }
  return y;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::kInvalidArgument, "matrix-matrix shape mismatch");
  }
  DenseMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

double norm_inf(std::span<const double> x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

double norm2(std::span<const double> x) {
  return std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
}

double sum(std::span<const double> x) {
  return std::accumulate(x.begin(), x.end(), 0.0);
}

double residual_inf(const DenseMatrix& a, std::span<const double> x,
                    std::span<const double> b) {
  DenseVector ax = multiply(a, x);
  double m = 0.0;
  for (std::size_t i = 0; i < ax.size(); ++i) {
    m = std::max(m, std::abs(ax[i] - b[i]));
  }
  return m;
}

DenseVector solve_dense(const DenseMatrix& a, std::span<const double> b) {
  if (!a.square()) {
    throw Error(ErrorKind::kInvalidArgument, "solve_dense needs a square matrix");
  }
  const std::size_t n = a.rows();
  if (b.size() != n) {
    throw Error(ErrorKind::kInvalidArgument,
                "right-hand side length does not match the matrix");
  }
  require_finite(b, "right-hand side");

  const double tol_pivot = 1e-12 * (1.0 + a.max_abs());
  DenseMatrix lu = a;
  DenseVector x(b.begin(), b.end());

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(lu(i, k)) > std::abs(lu(pivot, k))) pivot = i;
    }
    if (std::abs(lu(pivot, k)) < tol_pivot) {
      throw Error(ErrorKind::kSingularMatrix,
                  "pivot below tolerance at column " + std::to_string(k));
    }
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(pivot, j));
      std::swap(x[k], x[pivot]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const double factor = lu(i, k) / lu(k, k);
      if (factor == 0.0) continue;
      for (std::size_t j = k; j < n; ++j) lu(i, j) -= factor * lu(k, j);
      x[i] -= factor * x[k];
    }
  }
  for (std::size_t k = n; k-- > 0;) {
    double s = x[k];
    for (std::size_t j = k + 1; j < n; ++j) s -= lu(k, j) * x[j];
    x[k] = s / lu(k, k);
  }

  if (residual_inf(a, x, b) > kTolResidual * (1.0 + norm_inf(b))) {
    throw Error(ErrorKind::kSingularMatrix,
                "system too ill-conditioned to meet the residual bound");
  }
  return x;
}

DenseVector symmetric_eigenvalues(const DenseMatrix& a) {
  if (!a.square()) {
    throw Error(ErrorKind::kNotSymmetric, "eigenvalues need a square matrix");
  }
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(a(i, j) - a(j, i)) > kTolSym) {
        throw Error(ErrorKind::kNotSymmetric, "matrix is not symmetric");
      }
    }
  }

  DenseMatrix w = a;
  int sweep = 0;
  while (off_diagonal_mass(w) >= kTolEig) {
    if (sweep++ >= kMaxSweeps) {
      throw Error(ErrorKind::kNoConvergence,
                  "Jacobi eigenvalue iteration did not converge");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = w(p, q);
        if (apq == 0.0) continue;
        // Rotation angle that annihilates w(p, q).
        const double theta = (w(q, q) - w(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double wkp = w(k, p);
          const double wkq = w(k, q);
          w(k, p) = c * wkp - s * wkq;
          w(k, q) = s * wkp + c * wkq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double wpk = w(p, k);
          const double wqk = w(q, k);
          w(p, k) = c * wpk - s * wqk;
          w(q, k) = s * wpk + c * wqk;
        }
        w(p, q) = 0.0;
        w(q, p) = 0.0;
      }
    }
  }

  DenseVector eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = w(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

}  // namespace rankforge::linalg
