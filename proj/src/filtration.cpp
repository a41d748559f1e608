#include "knotfold/filtration.hpp"

#include "knotfold/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace knotfold {

namespace {

bool passes(ClassFilter filter, bool alternating) {
  switch (filter) {
    case ClassFilter::all:
      return true;
    case ClassFilter::alternating:
      return alternating;
    case ClassFilter::nonalternating:
      return !alternating;
  }
  return true;
}

}  // namespace

std::vector<FiltrationStep> crossing_filtration(const std::vector<CloudRow>& rows, int k_min, int k_max,
                                                ClassFilter filter) {
  if (k_min > k_max) throw Error(ErrorKind::MalformedInput, "k_min must not exceed k_max");
  std::vector<FiltrationStep> steps;
  for (int k = k_min; k <= k_max; ++k) {
    std::vector<CloudRow> members;
    for (const auto& r : rows)
      if (r.crossing_number <= k && passes(filter, r.alternating)) members.push_back(r);
    FiltrationStep step;
    step.label = "k=" + std::to_string(k);
    step.parameter = k;
    if (members.empty())
      step.empty = true;
    else
      step.cloud = align(members);
    steps.push_back(std::move(step));
  }
  return steps;
}

std::vector<FiltrationStep> norm_filtration(const AlignedCloud& cloud, int levels) {
  if (levels < 1) throw Error(ErrorKind::MalformedInput, "norm filtration needs at least one level");
  if (cloud.rows() == 0) throw Error(ErrorKind::EmptyFamily, "norm filtration of an empty cloud");
  std::vector<std::size_t> order(cloud.rows());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (cloud.norms[a] != cloud.norms[b]) return cloud.norms[a] < cloud.norms[b];
    return cloud.row_ids[a] < cloud.row_ids[b];
  });
  std::vector<FiltrationStep> steps;
  const std::size_t n = cloud.rows();
  for (int i = levels - 1; i >= 0; --i) {
    const std::size_t divisor = std::size_t{1} << static_cast<unsigned>(std::min(i, 62));
    const std::size_t take = std::max<std::size_t>(1, (n + divisor - 1) / divisor);
    std::vector<std::size_t> chosen(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(take));
    std::sort(chosen.begin(), chosen.end());
    FiltrationStep step;
    step.label = "level=" + std::to_string(i);
    step.cloud = select_rows(cloud, chosen);
    step.parameter = cloud.norms[order[take - 1]];
    steps.push_back(std::move(step));
  }
  return steps;
}

StepAnalysis analyze_step(const FiltrationStep& step, double threshold) {
  StepAnalysis a;
  a.label = step.label;
  a.parameter = step.parameter;
  a.count = step.cloud.rows();
  a.window = step.cloud.window;
  const CovarianceAccumulator acc = accumulate(step.cloud);
  const Matrix k = acc.finalize();
  for (std::size_t i = 0; i < k.rows; ++i) a.trace += k(i, i);
  a.mean = acc.mean();
  a.eigen = sym_eig(k);
  a.variance = normalized_variances(a.eigen);
  a.dimension_estimate = dimension_estimate(a.variance.normalized, threshold);
  return a;
}

std::vector<double> angle_trajectory(const StepAnalysis& prev, const StepAnalysis& next, std::size_t tracked) {
  const std::size_t count = std::min({tracked, prev.eigen.vectors.rows, next.eigen.vectors.rows});
  std::vector<double> theta;
  for (std::size_t i = 0; i < count; ++i) {
    const auto lifted = embed(prev.eigen.vectors.row(i), prev.window, next.window);
    const auto v = next.eigen.vectors.row(i);
    double dot = 0.0;
    for (std::size_t j = 0; j < v.size(); ++j) dot += v[j] * lifted[j];
    // arccos(|dot|), evaluated as 2 atan2(|a - b|, |a + b|) with b sign-aligned
    // so that nearly parallel vectors keep their precision
    const double s = dot < 0 ? -1.0 : 1.0;
    double diff = 0.0, sum = 0.0;
    for (std::size_t j = 0; j < v.size(); ++j) {
      diff += (v[j] - s * lifted[j]) * (v[j] - s * lifted[j]);
      sum += (v[j] + s * lifted[j]) * (v[j] + s * lifted[j]);
    }
    theta.push_back(2.0 * std::atan2(std::sqrt(diff), std::sqrt(sum)));
  }
  return theta;
}

FiltrationReport eigensystem_trajectory(const std::vector<FiltrationStep>& steps, double threshold,
                                        std::size_t tracked) {
  FiltrationReport report;
  report.tracked = tracked;
  for (const auto& step : steps) {
    if (step.empty) {
      report.empty_steps.push_back(step.label);
      continue;
    }
    report.steps.push_back(analyze_step(step, threshold));
  }
  for (std::size_t j = 0; j + 1 < report.steps.size(); ++j)
    report.angles.push_back(angle_trajectory(report.steps[j], report.steps[j + 1], tracked));
  for (std::size_t i = 0; i < tracked; ++i) {
    std::vector<double> values;
    for (const auto& s : report.steps)
      if (i < s.variance.normalized.size()) values.push_back(s.variance.normalized[i]);
    report.spread.push_back(values.empty() ? 0.0 : relative_spread(values));
  }
  return report;
}

double relative_spread(const std::vector<double>& values) {
  if (values.empty()) throw Error(ErrorKind::InsufficientData, "relative spread of no values");
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
  if (mean == 0.0) return 0.0;
  return (*hi - *lo) / mean * 100.0;
}

NormHistogram norm_histogram(const AlignedCloud& cloud, std::size_t bins) {
  if (bins == 0) throw Error(ErrorKind::MalformedInput, "histogram needs at least one bin");
  NormHistogram h;
  h.alternating.assign(bins, 0);
  h.nonalternating.assign(bins, 0);
  h.combined.assign(bins, 0);
  for (double r : cloud.norms) h.r_max = std::max(h.r_max, r);
  for (std::size_t i = 0; i < cloud.rows(); ++i) {
    std::size_t bin = 0;
    if (h.r_max > 0) {
      bin = static_cast<std::size_t>(cloud.norms[i] / h.r_max * static_cast<double>(bins));
      bin = std::min(bin, bins - 1);
    }
    ++h.combined[bin];
    ++(cloud.class_flags[i] ? h.alternating : h.nonalternating)[bin];
  }
  return h;
}

double median(std::vector<double> values) {
  if (values.empty()) throw Error(ErrorKind::InsufficientData, "median of no values");
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

}  // namespace knotfold
