#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace rankforge::linalg {

using DenseVector = std::vector<double>;

inline constexpr double kTolResidual = 1e-9;
inline constexpr double kTolEig = 1e-10;
inline constexpr double kTolSym = 1e-10;
inline constexpr int kMaxSweeps = 100;

// Row-major dense matrix. Entries are required to be finite.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols);
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  double operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  double& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }

  std::span<const double> row(std::size_t i) const {
    return {entries_.data() + i * cols_, cols_};
  }
  std::span<const double> entries() const noexcept { return entries_; }

  DenseMatrix transpose() const;
  double max_abs() const noexcept;

  // Copy of this matrix with row `i` overwritten by `values`.
  DenseMatrix with_row(std::size_t i, std::span<const double> values) const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> entries_;
};

DenseVector multiply(const DenseMatrix& a, std::span<const double> x);
DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);

double norm_inf(std::span<const double> x);
double norm2(std::span<const double> x);
double sum(std::span<const double> x);

// Max-norm of A x - b.
double residual_inf(const DenseMatrix& a, std::span<const double> x,
                    std::span<const double> b);

// Gaussian elimination with partial pivoting. Throws SingularMatrix when a
// pivot drops below 1e-12 * (1 + max|A_ij|), or when the residual bound
// ||Ax - b||_inf <= kTolResidual * (1 + ||b||_inf) cannot be met.
DenseVector solve_dense(const DenseMatrix& a, std::span<const double> b);

// Cyclic Jacobi rotations until the off-diagonal Frobenius mass is below
// kTolEig. Eigenvalues come back sorted ascending.
DenseVector symmetric_eigenvalues(const DenseMatrix& a);

}  // namespace rankforge::linalg
