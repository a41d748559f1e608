#pragma once

#include "knotfold/pca.hpp"
#include "knotfold/pointcloud.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace knotfold {

enum class ClassFilter { all, alternating, nonalternating };

/// One step of a filtration. Crossing steps are aligned on their own window;
/// norm levels keep the window of the parent cloud.
struct FiltrationStep {
  std::string label;    // "k=12" or "level=3"
  double parameter = 0;  // crossing bound k, or radius r_i
  AlignedCloud cloud;
  bool empty = false;  // reported, not fatal
};

/// Step k holds every row with crossing number <= k passing the filter.
std::vector<FiltrationStep> crossing_filtration(const std::vector<CloudRow>& rows, int k_min, int k_max,
                                                ClassFilter filter = ClassFilter::all);

/// Levels L-1 .. 0: level i holds the ceil(n / 2^i) rows of smallest norm
/// (ties broken by row id); its radius is the largest norm it contains.
std::vector<FiltrationStep> norm_filtration(const AlignedCloud& cloud, int levels);

struct StepAnalysis {
  std::string label;
  double parameter = 0;
  std::size_t count = 0;
  DegreeWindow window;
  EigenSystem eigen;
  std::vector<double> mean;
  ExplainedVariance variance;
  std::size_t dimension_estimate = 0;
  double trace = 0;
};

StepAnalysis analyze_step(const FiltrationStep& step, double threshold = 0.95);

struct FiltrationReport {
  std::vector<StepAnalysis> steps;
  std::vector<std::string> empty_steps;
  std::size_t tracked = 6;
  /// angles[j][i]: theta between component i of steps j and j+1.
  std::vector<std::vector<double>> angles;
  /// Per tracked component, relative spread of lambda_bar_i across steps (%).
  std::vector<double> spread;
};

/// Runs PCA on every non-empty step, then the cross-step angle pass.
FiltrationReport eigensystem_trajectory(const std::vector<FiltrationStep>& steps, double threshold = 0.95,
                                        std::size_t tracked = 6);

/// theta_i = arccos(|v_i(next) . embed(v_i(prev))|) for i < tracked.
/// Throws Error(WindowOverflow) when prev's window does not fit in next's.
std::vector<double> angle_trajectory(const StepAnalysis& prev, const StepAnalysis& next, std::size_t tracked);

/// (max - min) / mean * 100.
double relative_spread(const std::vector<double>& values);

struct NormHistogram {
  double r_max = 0;
  std::vector<std::size_t> alternating;
  std::vector<std::size_t> nonalternating;
  std::vector<std::size_t> combined;
};

/// Equal-width bins over [0, r_max]; the top edge falls in the last bin.
NormHistogram norm_histogram(const AlignedCloud& cloud, std::size_t bins);

double median(std::vector<double> values);

}  // namespace knotfold
