#pragma once

#include "knotfold/cache.hpp"
#include "knotfold/dataset.hpp"
#include "knotfold/families.hpp"
#include "knotfold/filtration.hpp"
#include "knotfold/pointcloud.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace knotfold {

/// KNOTFOLD_WORKERS when set to a positive integer, else the core count.
std::size_t default_workers();

struct ComputeOptions {
  std::size_t workers = 1;
  /// Quarantined records (ingest rejects plus compute failures) above this
  /// share of all input lines fail the run with Error(QuarantineOverflow).
  double max_reject_fraction = 0.05;
  OrientationRule rule;
  /// Compute sigma from the diagram when the input has none.
  bool compute_signature = true;
};

struct ComputeResult {
  std::vector<KnotRecord> records;  // canonicalized, dataset order
  std::vector<Reject> failures;
  std::size_t computed = 0;
  std::size_t cached = 0;
};

/// Fills the cache for every record not already present, in dataset-order
/// chunks, so the cache file is identical for any worker count.
ComputeResult compute_batch(const Dataset& ds, InvariantCache& cache, const ComputeOptions& options);

/// Writes the family as a `family` dataset file at `dataset_path` and ingests it.
Dataset generate_family(FamilyKind kind, int limit, const std::string& dataset_path);

enum class FiltrationKind { crossing, norm };

struct AnalysisConfig {
  std::vector<std::string> inputs;
  InputFormat format = InputFormat::dt;
  DtSignConvention convention = DtSignConvention::a;
  std::string cache_path;
  std::string out_dir;
  FiltrationKind filtration = FiltrationKind::crossing;
  ClassFilter class_filter = ClassFilter::all;
  int levels = 8;
  std::optional<int> k_min;  // defaults: smallest / largest crossing number present
  std::optional<int> k_max;
  double threshold = 0.95;
  std::size_t tracked = 6;
  std::size_t bins = 40;
  std::size_t projection_dims = 3;
  ComputeOptions compute;
  bool timings = false;
  bool write_cloud = false;
};

struct AnalysisOutcome {
  Dataset dataset;
  ComputeResult computed;
  FiltrationReport report;
  NormHistogram histogram;
};

/// ingest -> compute_batch -> filtration -> PCA -> report bundle in out_dir.
AnalysisOutcome run_analysis(const AnalysisConfig& config);

std::string_view to_string(FiltrationKind kind);
std::string_view to_string(ClassFilter filter);
FiltrationKind parse_filtration(std::string_view text);
ClassFilter parse_class_filter(std::string_view text);

}  // namespace knotfold
