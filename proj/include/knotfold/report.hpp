#pragma once

#include "knotfold/pipeline.hpp"

#include <iosfwd>
#include <string>

namespace knotfold {

struct RunTimings {
  double ingest = 0;
  double compute = 0;
  double analysis = 0;
};

struct ReportBundle {
  const AnalysisConfig& config;
  const Dataset& dataset;
  const ComputeResult& computed;
  const FiltrationReport& report;
  const NormHistogram& histogram;
  const AlignedCloud& cloud;  // cloud of the last step, used for the projection
  const Matrix& projection;
};

/// `i,lambda_i,lambda_bar_i,S_i`, i 1-based.
void write_spectrum_csv(std::ostream& out, const StepAnalysis& step);
void write_steps_csv(std::ostream& out, const FiltrationReport& report);
void write_trajectory_csv(std::ostream& out, const FiltrationReport& report);
void write_angles_csv(std::ostream& out, const FiltrationReport& report);
void write_spread_csv(std::ostream& out, const FiltrationReport& report);
void write_histogram_csv(std::ostream& out, const NormHistogram& h, ClassFilter which);
void write_projection_csv(std::ostream& out, const AlignedCloud& cloud, const Matrix& projection);

/// Deterministic JSON (keys sorted); timings only when given.
std::string manifest_json(const ReportBundle& bundle, const RunTimings* timings);

/// Writes the whole bundle into `dir`, creating it if needed.
void write_report(const std::string& dir, const ReportBundle& bundle, const RunTimings* timings);

}  // namespace knotfold
