#include "knotfold/pca.hpp"

#include "knotfold/error.hpp"

#include <algorithm>

namespace knotfold {

namespace {

constexpr std::size_t kBlockRows = 32;

void check_dimension(std::size_t expected, std::size_t got) {
  if (expected != got)
    throw Error(ErrorKind::DimensionMismatch,
                "expected dimension " + std::to_string(expected) + ", got " + std::to_string(got));
}

}  // namespace

CovarianceAccumulator::CovarianceAccumulator(std::size_t dimension)
    : d_(dimension), mean_(dimension, 0.0), m2_(dimension * dimension, 0.0) {}

void CovarianceAccumulator::add(std::span<const double> row) {
  check_dimension(d_, row.size());
  ++n_;
  std::vector<double> delta(d_);
  for (std::size_t i = 0; i < d_; ++i) {
    delta[i] = row[i] - mean_[i];
    mean_[i] += delta[i] / static_cast<double>(n_);
  }
  for (std::size_t i = 0; i < d_; ++i) {
    if (delta[i] == 0.0) continue;
    double* out = m2_.data() + i * d_;
    for (std::size_t j = i; j < d_; ++j) out[j] += delta[i] * (row[j] - mean_[j]);
  }
}

void CovarianceAccumulator::add_block(std::span<const double> rows) {
  if (d_ == 0) return;
  if (rows.size() % d_ != 0) throw Error(ErrorKind::DimensionMismatch, "block is not a whole number of rows");
  const std::size_t count = rows.size() / d_;
  if (count == 0) return;
  CovarianceAccumulator block(d_);
  block.n_ = count;
  for (std::size_t b = 0; b < count; ++b)
    for (std::size_t i = 0; i < d_; ++i) block.mean_[i] += rows[b * d_ + i];
  for (double& m : block.mean_) m /= static_cast<double>(count);
  std::vector<double> centered(rows.begin(), rows.end());
  for (std::size_t b = 0; b < count; ++b)
    for (std::size_t i = 0; i < d_; ++i) centered[b * d_ + i] -= block.mean_[i];
  for (std::size_t i = 0; i < d_; ++i) {
    double* out = block.m2_.data() + i * d_;
    for (std::size_t b = 0; b < count; ++b) {
      const double* c = centered.data() + b * d_;
      const double ci = c[i];
      if (ci == 0.0) continue;
      for (std::size_t j = i; j < d_; ++j) out[j] += ci * c[j];
    }
  }
  merge(block);
}

void CovarianceAccumulator::add_block(std::span<const std::int64_t> rows) {
  std::vector<double> converted(rows.begin(), rows.end());
  add_block(std::span<const double>(converted));
}

void CovarianceAccumulator::merge(const CovarianceAccumulator& other) {
  check_dimension(d_, other.d_);
  if (other.n_ == 0) return;
  if (n_ == 0) {
    *this = other;
    return;
  }
  const double na = static_cast<double>(n_);
  const double nb = static_cast<double>(other.n_);
  const double n = na + nb;
  std::vector<double> delta(d_);
  for (std::size_t i = 0; i < d_; ++i) delta[i] = other.mean_[i] - mean_[i];
  const double w = na * nb / n;
  for (std::size_t i = 0; i < d_; ++i) {
    double* out = m2_.data() + i * d_;
    const double* in = other.m2_.data() + i * d_;
    const double di = delta[i] * w;
    for (std::size_t j = i; j < d_; ++j) out[j] += in[j] + di * delta[j];
  }
  for (std::size_t i = 0; i < d_; ++i) mean_[i] += delta[i] * nb / n;
  n_ += other.n_;
}

Matrix CovarianceAccumulator::finalize() const {
  if (n_ < 2) throw Error(ErrorKind::InsufficientData, "covariance needs at least two rows");
  Matrix k(d_, d_);
  const double scale = 1.0 / static_cast<double>(n_ - 1);
  for (std::size_t i = 0; i < d_; ++i)
    for (std::size_t j = i; j < d_; ++j) k(i, j) = k(j, i) = m2_[i * d_ + j] * scale;
  return k;
}

CovarianceAccumulator accumulate(const AlignedCloud& cloud) {
  const std::size_t d = cloud.dimension();
  CovarianceAccumulator acc(d);
  for (std::size_t start = 0; start < cloud.rows(); start += kBlockRows) {
    const std::size_t stop = std::min(cloud.rows(), start + kBlockRows);
    acc.add_block(std::span<const std::int64_t>(cloud.matrix.data() + start * d, (stop - start) * d));
  }
  return acc;
}

ExplainedVariance normalized_variances(const EigenSystem& es) { return normalized_variances(es.values); }

ExplainedVariance normalized_variances(std::span<const double> eigenvalues) {
  double total = 0.0;
  for (double v : eigenvalues) total += std::max(v, 0.0);
  if (!(total > 0.0)) throw Error(ErrorKind::DegenerateSpectrum, "no positive eigenvalue");
  ExplainedVariance ev;
  double running = 0.0;
  for (double v : eigenvalues) {
    const double share = std::max(v, 0.0) / total;
    running += share;
    ev.normalized.push_back(share);
    ev.cumulative.push_back(running);
  }
  return ev;
}

std::size_t dimension_estimate(std::span<const double> normalized, double r) {
  double running = 0.0;
  for (std::size_t k = 0; k < normalized.size(); ++k) {
    running += normalized[k];
    if (running >= r) return k + 1;
  }
  return normalized.size();
}

Matrix project(const AlignedCloud& cloud, std::span<const double> mean, const EigenSystem& es, std::size_t k) {
  const std::size_t d = cloud.dimension();
  check_dimension(d, mean.size());
  check_dimension(d, es.vectors.cols);
  if (k > es.vectors.rows) throw Error(ErrorKind::DimensionMismatch, "more components requested than available");
  Matrix out(cloud.rows(), k);
  std::vector<double> centered(d);
  for (std::size_t r = 0; r < cloud.rows(); ++r) {
    const auto row = cloud.row(r);
    for (std::size_t j = 0; j < d; ++j) centered[j] = static_cast<double>(row[j]) - mean[j];
    for (std::size_t c = 0; c < k; ++c) {
      const auto v = es.vectors.row(c);
      double dot = 0.0;
      for (std::size_t j = 0; j < d; ++j) dot += centered[j] * v[j];
      out(r, c) = dot;
    }
  }
  return out;
}

}  // namespace knotfold
