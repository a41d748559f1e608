#include "knotfold/error.hpp"
#include "knotfold/format.hpp"
#include "knotfold/pipeline.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

using namespace knotfold;

namespace {

struct Common {
  std::vector<std::string> inputs;
  std::string format = "dt";
  std::string convention = "a";
  std::string cache;
  std::string out = "knotfold_report";
  std::size_t workers = default_workers();
  double max_reject = 0.05;
};

void add_common(CLI::App* cmd, Common& c, bool with_inputs) {
  if (with_inputs) cmd->add_option("inputs", c.inputs, "Dataset files")->required();
  cmd->add_option("--format", c.format, "dt, pd or family")->capture_default_str();
  cmd->add_option("--dt-sign-convention", c.convention, "a or b")->check(CLI::IsMember({"a", "b"}))->capture_default_str();
  cmd->add_option("--cache", c.cache, "Invariant cache file");
  cmd->add_option("--workers", c.workers, "Worker threads (KNOTFOLD_WORKERS)")->check(CLI::PositiveNumber);
  cmd->add_option("--max-reject-fraction", c.max_reject, "Quarantine share that fails the run")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
}

DtSignConvention convention_of(const Common& c) {
  return c.convention == "b" ? DtSignConvention::b : DtSignConvention::a;
}

void print_summary(const Dataset& ds) {
  std::cout << "records " << ds.records.size() << "\nrejects " << ds.rejects.size() << "\ndigest " << ds.digest << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jones polynomial point clouds and their principal components"};
  app.require_subcommand(1);
  Common common;

  auto* ingest_cmd = app.add_subcommand("ingest", "Parse a dataset and list rejected lines");
  add_common(ingest_cmd, common, true);
  std::string rejects_path;
  ingest_cmd->add_option("--rejects", rejects_path, "Write rejects CSV here");

  auto* compute_cmd = app.add_subcommand("compute", "Compute invariants into the cache");
  add_common(compute_cmd, common, true);

  auto* generate_cmd = app.add_subcommand("generate", "Generate a knot family dataset and compute it");
  add_common(generate_cmd, common, false);
  std::string family;
  int max_crossings = 0;
  generate_cmd->add_option("--family", family, "torus or double-twist")->required();
  generate_cmd->add_option("--max-crossings", max_crossings, "Crossing number limit")->required();
  std::string dataset_path = "family.txt";
  generate_cmd->add_option("--dataset", dataset_path, "Where to write the family dataset")->capture_default_str();

  auto* analyze_cmd = app.add_subcommand("analyze", "Run a filtration analysis and write the report bundle");
  add_common(analyze_cmd, common, true);
  AnalysisConfig config;
  std::string filtration = "crossing", class_filter = "all";
  int kmin = 0, kmax = 0;
  analyze_cmd->add_option("--filtration", filtration, "crossing or norm")
      ->check(CLI::IsMember({"crossing", "norm"}))
      ->capture_default_str();
  analyze_cmd->add_option("--class", class_filter, "all, alt or nonalt")
      ->check(CLI::IsMember({"all", "alt", "nonalt"}))
      ->capture_default_str();
  analyze_cmd->add_option("--levels", config.levels, "Norm filtration levels")->capture_default_str();
  auto* kmin_opt = analyze_cmd->add_option("--kmin", kmin, "First crossing step");
  auto* kmax_opt = analyze_cmd->add_option("--kmax", kmax, "Last crossing step");
  analyze_cmd->add_option("--variance-threshold", config.threshold, "Dimension estimate threshold")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  analyze_cmd->add_option("--tracked", config.tracked, "Tracked components")->capture_default_str();
  analyze_cmd->add_option("--bins", config.bins, "Histogram bins")->check(CLI::PositiveNumber)->capture_default_str();
  analyze_cmd->add_option("--out", common.out, "Report directory")->capture_default_str();
  analyze_cmd->add_flag("--timings", config.timings, "Record wall-clock timings in the manifest");
  analyze_cmd->add_flag("--cloud", config.write_cloud, "Also write the aligned cloud");

  auto* export_cmd = app.add_subcommand("export", "Print one table of a report bundle");
  std::string what, report_dir = "knotfold_report";
  std::size_t step = 0;
  export_cmd->add_option("--what", what, "spectrum, trajectory, angles, histogram or projection")
      ->check(CLI::IsMember({"spectrum", "trajectory", "angles", "histogram", "projection", "spread", "steps"}))
      ->required();
  export_cmd->add_option("--report", report_dir, "Report directory")->capture_default_str();
  export_cmd->add_option("--step", step, "Step for --what spectrum")->capture_default_str();
  std::string hist_class = "combined";
  export_cmd->add_option("--histogram-class", hist_class, "alternating, nonalternating or combined")
      ->check(CLI::IsMember({"alternating", "nonalternating", "combined"}))
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    ComputeOptions options;
    options.workers = common.workers;
    options.max_reject_fraction = common.max_reject;

    if (*ingest_cmd) {
      const Dataset ds = ingest(common.inputs, parse_format(common.format), convention_of(common));
      print_summary(ds);
      if (!rejects_path.empty()) {
        std::ofstream out(rejects_path, std::ios::binary);
        write_rejects(out, ds.rejects);
      } else {
        for (const auto& r : ds.rejects) std::cout << r.source << ':' << r.line << ": " << r.reason << '\n';
      }
    } else if (*compute_cmd || *generate_cmd) {
      Dataset ds;
      if (*generate_cmd)
        ds = generate_family(parse_family_kind(family), max_crossings, dataset_path);
      else
        ds = ingest(common.inputs, parse_format(common.format), convention_of(common));
      InvariantCache cache(common.cache);
      const ComputeResult r = compute_batch(ds, cache, options);
      print_summary(ds);
      std::cout << "computed " << r.computed << "\ncached " << r.cached << "\nfailures " << r.failures.size() << '\n';
    } else if (*analyze_cmd) {
      config.inputs = common.inputs;
      config.format = parse_format(common.format);
      config.convention = convention_of(common);
      config.cache_path = common.cache;
      config.out_dir = common.out;
      config.filtration = parse_filtration(filtration);
      config.class_filter = parse_class_filter(class_filter);
      if (*kmin_opt) config.k_min = kmin;
      if (*kmax_opt) config.k_max = kmax;
      config.compute = options;
      const AnalysisOutcome o = run_analysis(config);
      for (const auto& s : o.report.steps)
        std::cout << s.label << " n=" << s.count << " d=" << s.window.width()
                  << " dim_est=" << s.dimension_estimate << '\n';
      for (const auto& e : o.report.empty_steps) std::cout << e << " empty\n";
      std::cout << "report " << common.out << '\n';
    } else if (*export_cmd) {
      static const std::map<std::string, std::string> files = {
          {"trajectory", "trajectory.csv"}, {"angles", "angles.csv"}, {"projection", "projection.csv"},
          {"spread", "spread.csv"},         {"steps", "steps.csv"}};
      std::string name;
      if (what == "spectrum")
        name = "spectrum_step_" + std::to_string(step) + ".csv";
      else if (what == "histogram")
        name = "histogram_" + hist_class + ".csv";
      else
        name = files.at(what);
      const auto path = std::filesystem::path(report_dir) / name;
      std::ifstream in(path, std::ios::binary);
      if (!in) throw Error(ErrorKind::Unreadable, "cannot read '" + path.string() + "'");
      std::cout << in.rdbuf();
    }
  } catch (const Error& e) {
    std::cerr << "knotfold: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return e.kind() == ErrorKind::QuarantineOverflow ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "knotfold: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
