#pragma once

#include "knotfold/pointcloud.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace knotfold {

/// Dense row-major matrix of doubles.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), data(r * c, fill) {}

  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  std::span<const double> row(std::size_t i) const { return {data.data() + i * cols, cols}; }
  std::span<double> row(std::size_t i) { return {data.data() + i * cols, cols}; }
};

/// Mergeable mean / centered second moment (Chan et al. pairwise update).
/// Only the upper triangle of the moment matrix is maintained.
class CovarianceAccumulator {
 public:
  explicit CovarianceAccumulator(std::size_t dimension = 0);

  std::size_t dimension() const noexcept { return d_; }
  std::size_t count() const noexcept { return n_; }
  const std::vector<double>& mean() const noexcept { return mean_; }

  /// Throws Error(DimensionMismatch).
  void add(std::span<const double> row);
  /// Adds `rows` (row-major, rows.size() / dimension() of them) as one block.
  void add_block(std::span<const double> rows);
  void add_block(std::span<const std::int64_t> rows);
  void merge(const CovarianceAccumulator& other);

  /// (1 / (n - 1)) * centered second moment. Throws Error(InsufficientData).
  Matrix finalize() const;

 private:
  std::size_t d_;
  std::size_t n_ = 0;
  std::vector<double> mean_;
  std::vector<double> m2_;  // upper triangle stored densely, d x d
};

/// Accumulates every row of `cloud` in fixed-size blocks merged in order.
CovarianceAccumulator accumulate(const AlignedCloud& cloud);

struct EigenSystem {
  std::vector<double> values;  // descending
  Matrix vectors;              // row i is the unit eigenvector of values[i]
};

/// Cyclic Jacobi up to this dimension, Householder + implicit QL above.
inline constexpr std::size_t kJacobiMaxDimension = 64;

/// Throws Error(NotSymmetric) or Error(NoConvergence). Each eigenvector's
/// largest-magnitude entry (lowest index on ties) is positive.
EigenSystem sym_eig(const Matrix& k);

struct ExplainedVariance {
  std::vector<double> normalized;  // lambda_bar_i, negative eigenvalues clipped to 0
  std::vector<double> cumulative;  // S_k
};

/// Throws Error(DegenerateSpectrum) when no eigenvalue is positive.
ExplainedVariance normalized_variances(const EigenSystem& es);
ExplainedVariance normalized_variances(std::span<const double> eigenvalues);

/// Smallest k with S_k >= r (1-based).
std::size_t dimension_estimate(std::span<const double> normalized, double r = 0.95);

/// Mean-centered rows expressed in the first k principal directions.
/// Throws Error(DimensionMismatch).
Matrix project(const AlignedCloud& cloud, std::span<const double> mean, const EigenSystem& es, std::size_t k);

}  // namespace knotfold
