#include "knotfold/report.hpp"

#include "knotfold/error.hpp"
#include "knotfold/format.hpp"

#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>

namespace knotfold {

namespace {

template <class F>
void write_file(const std::filesystem::path& path, F&& body) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Unreadable, "cannot write '" + path.string() + "'");
  body(out);
  if (!out) throw Error(ErrorKind::Unreadable, "failed writing '" + path.string() + "'");
}

}  // namespace

void write_spectrum_csv(std::ostream& out, const StepAnalysis& step) {
  out << "i,lambda_i,lambda_bar_i,S_i\n";
  for (std::size_t i = 0; i < step.eigen.values.size(); ++i)
    out << i + 1 << ',' << format_real(step.eigen.values[i]) << ',' << format_real(step.variance.normalized[i]) << ','
        << format_real(step.variance.cumulative[i]) << '\n';
}

void write_steps_csv(std::ostream& out, const FiltrationReport& report) {
  out << "step,label,parameter,count,min_degree,max_degree,dimension,trace,dimension_estimate\n";
  for (std::size_t j = 0; j < report.steps.size(); ++j) {
    const auto& s = report.steps[j];
    out << j << ',' << s.label << ',' << format_real(s.parameter) << ',' << s.count << ',' << s.window.min_degree
        << ',' << s.window.max_degree << ',' << s.window.width() << ',' << format_real(s.trace) << ','
        << s.dimension_estimate << '\n';
  }
}

void write_trajectory_csv(std::ostream& out, const FiltrationReport& report) {
  out << "step,parameter,component,lambda_bar\n";
  for (std::size_t j = 0; j < report.steps.size(); ++j) {
    const auto& s = report.steps[j];
    const std::size_t m = std::min(report.tracked, s.variance.normalized.size());
    for (std::size_t i = 0; i < m; ++i)
      out << j << ',' << format_real(s.parameter) << ',' << i + 1 << ',' << format_real(s.variance.normalized[i])
          << '\n';
  }
}

void write_angles_csv(std::ostream& out, const FiltrationReport& report) {
  out << "step,component,theta\n";
  for (std::size_t j = 0; j < report.angles.size(); ++j)
    for (std::size_t i = 0; i < report.angles[j].size(); ++i)
      out << j << ',' << i + 1 << ',' << format_real(report.angles[j][i]) << '\n';
}

void write_spread_csv(std::ostream& out, const FiltrationReport& report) {
  out << "component,relative_spread_percent\n";
  for (std::size_t i = 0; i < report.spread.size(); ++i) out << i + 1 << ',' << format_real(report.spread[i]) << '\n';
}

void write_histogram_csv(std::ostream& out, const NormHistogram& h, ClassFilter which) {
  const auto& counts = which == ClassFilter::alternating      ? h.alternating
                       : which == ClassFilter::nonalternating ? h.nonalternating
                                                              : h.combined;
  out << "bin,lower,upper,count\n";
  const double width = counts.empty() ? 0.0 : h.r_max / static_cast<double>(counts.size());
  for (std::size_t b = 0; b < counts.size(); ++b)
    out << b << ',' << format_real(width * static_cast<double>(b)) << ','
        << format_real(b + 1 == counts.size() ? h.r_max : width * static_cast<double>(b + 1)) << ',' << counts[b]
        << '\n';
}

void write_projection_csv(std::ostream& out, const AlignedCloud& cloud, const Matrix& projection) {
  out << "id";
  for (std::size_t c = 0; c < projection.cols; ++c) out << ",pc" << c + 1;
  out << ",sigma\n";
  for (std::size_t r = 0; r < projection.rows; ++r) {
    out << cloud.row_ids[r];
    for (std::size_t c = 0; c < projection.cols; ++c) out << ',' << format_real(projection(r, c));
    out << ',';
    if (cloud.sigma_values[r]) out << *cloud.sigma_values[r];
    out << '\n';
  }
}

std::string manifest_json(const ReportBundle& b, const RunTimings* timings) {
  using nlohmann::json;
  const AnalysisConfig& c = b.config;
  json config = {
      {"inputs", c.inputs},
      {"format", std::string(to_string(c.format))},
      {"dt_sign_convention", c.convention == DtSignConvention::a ? "a" : "b"},
      {"filtration", std::string(to_string(c.filtration))},
      {"class", std::string(to_string(c.class_filter))},
      {"variance_threshold", format_real(c.threshold)},
      {"tracked", c.tracked},
      {"bins", c.bins},
      {"max_reject_fraction", format_real(c.compute.max_reject_fraction)},
  };
  if (c.filtration == FiltrationKind::norm) config["levels"] = c.levels;
  if (c.k_min) config["kmin"] = *c.k_min;
  if (c.k_max) config["kmax"] = *c.k_max;

  json steps = json::array();
  for (const auto& s : b.report.steps)
    steps.push_back({{"label", s.label},
                     {"count", s.count},
                     {"dimension", s.window.width()},
                     {"min_degree", s.window.min_degree},
                     {"dimension_estimate", s.dimension_estimate}});

  json m = {
      {"config", config},
      {"dataset", {{"digest", b.dataset.digest}, {"records", b.dataset.records.size()}}},
      {"counts",
       {{"ingest_rejects", b.dataset.rejects.size()},
        {"compute_failures", b.computed.failures.size()},
        {"analyzed", b.computed.records.size()},
        {"projected", b.projection.rows}}},
      {"steps", steps},
      {"empty_steps", b.report.empty_steps},
  };
  if (timings)
    m["timings_seconds"] = {{"ingest", format_real(timings->ingest)},
                            {"compute", format_real(timings->compute)},
                            {"analysis", format_real(timings->analysis)}};
  return m.dump(2) + "\n";
}

void write_report(const std::string& dir, const ReportBundle& b, const RunTimings* timings) {
  namespace fs = std::filesystem;
  const fs::path root(dir);
  std::error_code ec;
  fs::create_directories(root, ec);
  if (ec) throw Error(ErrorKind::Unreadable, "cannot create '" + dir + "'");

  for (std::size_t j = 0; j < b.report.steps.size(); ++j)
    write_file(root / ("spectrum_step_" + std::to_string(j) + ".csv"),
               [&](std::ostream& o) { write_spectrum_csv(o, b.report.steps[j]); });
  write_file(root / "steps.csv", [&](std::ostream& o) { write_steps_csv(o, b.report); });
  write_file(root / "trajectory.csv", [&](std::ostream& o) { write_trajectory_csv(o, b.report); });
  write_file(root / "angles.csv", [&](std::ostream& o) { write_angles_csv(o, b.report); });
  write_file(root / "spread.csv", [&](std::ostream& o) { write_spread_csv(o, b.report); });
  write_file(root / "histogram_alternating.csv",
             [&](std::ostream& o) { write_histogram_csv(o, b.histogram, ClassFilter::alternating); });
  write_file(root / "histogram_nonalternating.csv",
             [&](std::ostream& o) { write_histogram_csv(o, b.histogram, ClassFilter::nonalternating); });
  write_file(root / "histogram_combined.csv",
             [&](std::ostream& o) { write_histogram_csv(o, b.histogram, ClassFilter::all); });
  write_file(root / "projection.csv", [&](std::ostream& o) { write_projection_csv(o, b.cloud, b.projection); });
  std::vector<Reject> rejects = b.dataset.rejects;
  rejects.insert(rejects.end(), b.computed.failures.begin(), b.computed.failures.end());
  write_file(root / "rejects.csv", [&](std::ostream& o) { write_rejects(o, rejects); });
  if (b.config.write_cloud) write_file(root / "cloud.csv", [&](std::ostream& o) { write_cloud_csv(o, b.cloud); });
  write_file(root / "run_manifest.json", [&](std::ostream& o) { o << manifest_json(b, timings); });
}

}  // namespace knotfold
