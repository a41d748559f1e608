// Acceptance checks, one PASS/FAIL line per criterion. Tolerances are fixed
// here. KNOTFOLD_FULL_DOUBLE_TWIST=1 adds the 2001-crossing double twist run.
#include "knotfold/bracket.hpp"
#include "knotfold/diagram_builder.hpp"
#include "knotfold/error.hpp"
#include "knotfold/families.hpp"
#include "knotfold/format.hpp"
#include "knotfold/jones.hpp"
#include "knotfold/pipeline.hpp"

#include <fmt/core.h>
#include <sys/resource.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

using namespace knotfold;
namespace fs = std::filesystem;

namespace {

constexpr double kSmallTableSeconds = 1.0;
constexpr double kOracleSeconds = 60.0;
constexpr double kTorusSeconds = 30 * 60.0;
constexpr double kTorusMaxRssGb = 8.0;
constexpr double kDesk13Seconds = 5 * 60.0;
constexpr double kS3Low = 0.986, kS3High = 0.994;
constexpr double kS2 = 0.9507, kS2Tol = 0.003;
constexpr double kHeavyHeadS4 = 0.90;
constexpr double kFullS4 = 0.969, kFullS3 = 0.948, kFullTol = 0.01;

std::string data(const std::string& name) { return std::string(KNOTFOLD_TEST_DATA) + "/" + name; }

std::vector<std::vector<std::string>> rows_of(const std::string& name) {
  std::ifstream in(data(name));
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ';')) f.push_back(cell);
    if (line.back() == ';') f.emplace_back();
    rows.push_back(f);
  }
  return rows;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double peak_rss_gb() {
  rusage u{};
  getrusage(RUSAGE_SELF, &u);
  return static_cast<double>(u.ru_maxrss) / (1024.0 * 1024.0);
}

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path p = fs::temp_directory_path() / ("knotfold_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

std::vector<CloudRow> compute_rows(const Dataset& ds, std::size_t workers = 1) {
  InvariantCache cache;
  ComputeOptions o;
  o.workers = workers;
  const auto r = compute_batch(ds, cache, o);
  std::vector<CloudRow> rows;
  for (const auto& k : r.records) rows.push_back(cloud_row(k));
  return rows;
}

struct Verdict {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
  void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

StepAnalysis analyze_family(FamilyKind kind, int limit, std::size_t& count) {
  const Dataset ds =
      generate_family(kind, limit, (scratch_dir() / fmt::format("family_{}.txt", limit)).string());
  const auto rows = compute_rows(ds, default_workers());
  count = rows.size();
  FiltrationStep step;
  step.label = "all";
  step.cloud = align(rows);
  return analyze_step(step);
}

Verdict small_table() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  const Dataset ds = ingest({data("knots_le6.dt")}, InputFormat::dt);
  const auto rows = compute_rows(ds);
  const AlignedCloud cloud = align(rows);
  const double dt = seconds_since(t0);
  const auto expected = rows_of("knots_le6_expected.txt");
  v.require(rows.size() == 8 && expected.size() == 8, "expected 8 knots");
  v.require(cloud.rows() == 8 && cloud.dimension() == 11, fmt::format("matrix {}x{}", cloud.rows(), cloud.dimension()));
  if (!v.pass) return v;
  for (std::size_t i = 0; i < 8; ++i) {
    v.require(rows[i].coefficients.to_polynomial() == LaurentPolynomial::parse(expected[i][1]),
              expected[i][0] + " polynomial");
    std::vector<std::int64_t> want;
    std::stringstream ss(expected[i][2]);
    std::string cell;
    while (std::getline(ss, cell, ',')) want.push_back(std::stoll(cell));
    const auto got = cloud.row(i);
    v.require(std::vector<std::int64_t>(got.begin(), got.end()) == want, expected[i][0] + " row");
  }
  v.require(dt < kSmallTableSeconds, fmt::format("took {:.3f}s", dt));
  v.note(fmt::format("8 polynomials and 8x11 rows exact, {:.3f}s", dt));
  return v;
}

Verdict skein() {
  Verdict v;
  const auto rows = rows_of("skein_triple.pd");
  const auto jp = jones(parse_pd(rows.at(0).at(1)));
  const auto jm = jones(parse_pd(rows.at(1).at(1)));
  const auto j0 = jones(parse_pd(rows.at(2).at(1)));
  v.require(jp == LaurentPolynomial::parse("q+q^3-q^4"), "L+ is not the right-handed trefoil");
  v.require(jm == LaurentPolynomial::parse("1"), "L- is not the unknot");
  v.require(parse_pd(rows[2][1]).component_count() == 2, "L0 is not a two-component link");
  v.require(skein_check(jp, jm, j0), "skein identity fails");
  v.note("J(L0) = " + j0.to_string());
  return v;
}

std::vector<PlanarDiagram> fixture_diagrams() {
  std::vector<PlanarDiagram> out;
  for (const auto& r : rows_of("knots_le6.dt")) out.push_back(realize_dt(parse_dt(r.size() > 2 ? r[2] : "")));
  for (const auto& r : rows_of("extras.pd")) out.push_back(parse_pd(r[2]));
  for (const auto& r : rows_of("skein_triple.pd")) out.push_back(parse_pd(r[1]));
  return out;
}

Verdict mirror_identity() {
  Verdict v;
  std::size_t n = 0;
  for (const auto& d : fixture_diagrams()) {
    v.require(jones(mirror(d)) == jones(d).substitute_inverse(), "diagram " + serialize_pd(d));
    ++n;
  }
  v.note(fmt::format("{} fixture diagrams", n));
  return v;
}

Verdict oracle_equivalence() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t diagrams = 0, twists = 0;
  auto compare = [&](const PlanarDiagram& d, const std::string& name) {
    if (kauffman_bracket(d, BracketMode::statesum) != kauffman_bracket(d, BracketMode::sweep))
      v.require(false, name);
    ++diagrams;
  };
  for (const auto& d : fixture_diagrams()) compare(d, serialize_pd(d));
  for (const auto& r : rows_of("knots_le13.dt"))
    if (std::stoi(r[1]) <= 12) compare(realize_dt(parse_dt(r[2])), r[0]);
  for (int m = 0; m <= 10; ++m)
    for (int n = 0; m + n <= 10; ++n) {
      if (m + n == 0) continue;
      if (jones_double_twist(m, n) != jones(double_twist_diagram(m, n), BracketMode::statesum))
        v.require(false, fmt::format("double twist {},{}", m, n));
      ++twists;
    }
  const double dt = seconds_since(t0);
  v.require(dt < kOracleSeconds, fmt::format("took {:.1f}s", dt));
  v.note(fmt::format("{} diagrams <= 12 crossings, {} twist pairs, {:.1f}s", diagrams, twists, dt));
  return v;
}

Verdict torus() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t count = 0;
  const StepAnalysis a = analyze_family(FamilyKind::torus, 2000, count);
  const double dt = seconds_since(t0);
  const double s25 = a.variance.cumulative.size() >= 25 ? a.variance.cumulative[24] : 0.0;
  v.require(count == 4501, fmt::format("{} knots", count));
  v.require(a.window.width() == 2998, fmt::format("dimension {}", a.window.width()));
  v.require(s25 > 0.95, "S_25 = " + format_real(s25));
  v.require(dt <= kTorusSeconds, fmt::format("took {:.0f}s", dt));
  v.require(peak_rss_gb() <= kTorusMaxRssGb, fmt::format("peak rss {:.2f} GB", peak_rss_gb()));
  v.note(fmt::format("4501 knots, d=2998, S_24={}, S_25={}, {:.0f}s, peak rss {:.2f} GB",
                     format_real(a.variance.cumulative[23]), format_real(s25), dt, peak_rss_gb()));
  return v;
}

Verdict double_twist() {
  Verdict v;
  std::size_t count = 0;
  const StepAnalysis a = analyze_family(FamilyKind::double_twist, 301, count);
  const auto& s = a.variance.cumulative;
  v.require(s.size() >= 4, "fewer than 4 components");
  if (!v.pass) return v;
  v.require(s[3] >= s[2], "S_4 < S_3");
  v.require(s[3] >= kHeavyHeadS4, "S_4 = " + format_real(s[3]) + " below heavy-head bound");
  v.note(fmt::format("limit 301: {} knots, d={}, S_1={} S_3={} S_4={}", count, a.window.width(), format_real(s[0]),
                     format_real(s[2]), format_real(s[3])));
  const char* full = std::getenv("KNOTFOLD_FULL_DOUBLE_TWIST");
  if (full && std::string(full) == "1") {
    const StepAnalysis b = analyze_family(FamilyKind::double_twist, 2001, count);
    const auto& t = b.variance.cumulative;
    v.require(t[3] > kFullS4 - kFullTol, "full S_4 = " + format_real(t[3]));
    v.require(std::abs(t[2] - kFullS3) <= kFullTol, "full S_3 = " + format_real(t[2]));
    v.note(fmt::format("limit 2001: {} knots, S_3={} S_4={}", count, format_real(t[2]), format_real(t[3])));
  } else {
    v.note("full 2001-crossing run skipped (set KNOTFOLD_FULL_DOUBLE_TWIST=1)");
  }
  return v;
}

struct Desk13 {
  std::vector<CloudRow> rows;
  FiltrationReport report;
  std::vector<FiltrationStep> steps;
  double seconds = 0;
};

const Desk13& desk13() {
  static const Desk13 d = [] {
    Desk13 out;
    const auto t0 = std::chrono::steady_clock::now();
    const Dataset ds = ingest({data("knots_le13.dt")}, InputFormat::dt);
    out.rows = compute_rows(ds, default_workers());
    out.steps = crossing_filtration(out.rows, 11, 13);
    out.report = eigensystem_trajectory(out.steps);
    out.seconds = seconds_since(t0);
    return out;
  }();
  return d;
}

Verdict crossing_filtration_13() {
  Verdict v;
  const auto& d = desk13();
  v.require(d.report.steps.size() == 3, "expected steps k=11,12,13");
  if (!v.pass) return v;
  std::string summary;
  for (const auto& s : d.report.steps) {
    const double s2 = s.variance.cumulative[1], s3 = s.variance.cumulative[2];
    summary += fmt::format("{}: n={} S_2={} S_3={} dim={}; ", s.label, s.count, format_real(s2), format_real(s3),
                           s.dimension_estimate);
    v.require(s3 >= kS3Low && s3 <= kS3High, s.label + " S_3 out of range");
    v.require(s.dimension_estimate == 3, fmt::format("{} dimension_estimate = {}", s.label, s.dimension_estimate));
    if (s.parameter >= 12) v.require(std::abs(s2 - kS2) <= kS2Tol, s.label + " S_2 out of range");
  }
  v.require(d.seconds < kDesk13Seconds, fmt::format("took {:.0f}s", d.seconds));
  for (const auto& s : d.report.steps)
    if (s.dimension_estimate == 2 && s.variance.cumulative[1] >= 0.95) {
      v.note("S_2 >= 0.95 gives estimate 2 under S_k >= r with r = 0.95, so the S_2 target near 0.9507 and "
             "an estimate of 3 cannot both hold");
      break;
    }
  v.note(summary + fmt::format("{:.1f}s", d.seconds));
  return v;
}

std::string read_all(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Verdict properties() {
  Verdict v;
  const auto& d = desk13();
  double orth = 0, residual = 0, trace_err = 0, sum_err = 0;
  for (std::size_t j = 0; j < d.steps.size(); ++j) {
    const auto& s = d.report.steps[j];
    const Matrix k = accumulate(d.steps[j].cloud).finalize();
    const std::size_t n = k.rows;
    double kmax = 0;
    for (double x : k.data) kmax = std::max(kmax, std::abs(x));
    double lam = 0;
    for (std::size_t a = 0; a < n; ++a) {
      lam += s.eigen.values[a];
      const auto va = s.eigen.vectors.row(a);
      for (std::size_t b = a; b < n; ++b) {
        double dot = 0;
        for (std::size_t t = 0; t < n; ++t) dot += va[t] * s.eigen.vectors(b, t);
        orth = std::max(orth, std::abs(dot - (a == b)));
      }
      for (std::size_t i = 0; i < n; ++i) {
        double kv = 0;
        for (std::size_t t = 0; t < n; ++t) kv += k(i, t) * va[t];
        residual = std::max(residual, std::abs(kv - s.eigen.values[a] * va[i]) / std::max(1.0, kmax));
      }
    }
    trace_err = std::max(trace_err, std::abs(lam - s.trace) / s.trace);
    double nsum = 0;
    for (double x : s.variance.normalized) nsum += x;
    sum_err = std::max(sum_err, std::abs(nsum - 1.0));
  }
  v.require(orth <= 1e-10, "orthonormality " + format_real(orth));
  v.require(residual <= 1e-8, "eigen residual " + format_real(residual));
  v.require(trace_err <= 1e-8, "trace " + format_real(trace_err));
  v.require(sum_err <= 1e-12, "sum of lambda_bar " + format_real(sum_err));

  // shard merge vs single pass, and row scaling, on the k=13 cloud
  const AlignedCloud& big = d.steps.back().cloud;
  const std::size_t dim = big.dimension();
  CovarianceAccumulator single(dim), sharded(dim);
  std::vector<double> row(dim);
  for (std::size_t i = 0; i < big.rows(); ++i) {
    for (std::size_t t = 0; t < dim; ++t) row[t] = static_cast<double>(big.row(i)[t]);
    single.add(row);
  }
  for (std::size_t start = 0; start < big.rows(); start += 1000) {
    CovarianceAccumulator shard(dim);
    const std::size_t end = std::min(big.rows(), start + 1000);
    shard.add_block(std::span<const std::int64_t>(big.matrix.data() + start * dim, (end - start) * dim));
    sharded.merge(shard);
  }
  const Matrix k1 = single.finalize(), k2 = sharded.finalize();
  double merge_err = 0, kscale = 0;
  for (double x : k1.data) kscale = std::max(kscale, std::abs(x));
  for (std::size_t i = 0; i < k1.data.size(); ++i) merge_err = std::max(merge_err, std::abs(k1.data[i] - k2.data[i]));
  v.require(merge_err <= 1e-10 * kscale, "shard merge " + format_real(merge_err / kscale));

  AlignedCloud scaled = big;
  for (auto& x : scaled.matrix) x *= 7;
  const auto base = d.report.steps.back();
  const auto es = sym_eig(accumulate(scaled).finalize());
  const auto ev = normalized_variances(es);
  double scale_err = 0;
  for (std::size_t i = 0; i < ev.normalized.size(); ++i)
    scale_err = std::max({scale_err, std::abs(ev.normalized[i] - base.variance.normalized[i]),
                          std::abs(ev.cumulative[i] - base.variance.cumulative[i])});
  v.require(scale_err <= 1e-10, "scale equivariance " + format_real(scale_err));
  for (double r : {0.9, 0.95, 0.99})
    v.require(dimension_estimate(ev.normalized, r) == dimension_estimate(base.variance.normalized, r),
              "dimension estimate changes under scaling");

  for (const auto& row_angles : d.report.angles)
    for (double t : row_angles) v.require(t >= 0 && t <= std::numbers::pi / 2, "angle out of range");
  for (const auto& s : d.report.steps)
    for (double t : angle_trajectory(s, s, 6)) v.require(t < 1e-8, "self angle " + format_real(t));

  // nesting and embedding on the six-crossing fixtures
  const auto fixture_rows = compute_rows(ingest({data("knots_le6.dt")}, InputFormat::dt));
  const auto steps = crossing_filtration(fixture_rows, 3, 6);
  for (std::size_t j = 0; j + 1 < steps.size(); ++j) {
    const auto& a = steps[j].cloud;
    const auto& b = steps[j + 1].cloud;
    std::map<std::string, std::size_t> where;
    for (std::size_t r = 0; r < b.rows(); ++r) where[b.row_ids[r]] = r;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      const auto it = where.find(a.row_ids[r]);
      if (it == where.end()) {
        v.require(false, "nesting broken at " + steps[j].label);
        continue;
      }
      std::vector<double> src(a.row(r).begin(), a.row(r).end());
      const auto lifted = embed(src, a.window, b.window);
      for (std::size_t c = 0; c < lifted.size(); ++c)
        if (lifted[c] != static_cast<double>(b.row(it->second)[c])) v.require(false, "embedding row mismatch");
    }
  }

  // byte determinism across worker counts
  std::string reference;
  for (std::size_t workers : {1u, 3u, 8u}) {
    AnalysisConfig cfg;
    cfg.inputs = {data("knots_le6.dt")};
    cfg.k_min = 3;
    cfg.k_max = 6;
    cfg.out_dir = (scratch_dir() / fmt::format("bundle_{}", workers)).string();
    cfg.compute.workers = workers;
    run_analysis(cfg);
    std::string all;
    for (const auto& e : std::set<fs::path>(fs::directory_iterator(cfg.out_dir), fs::directory_iterator()))
      all += e.filename().string() + "\n" + read_all(e);
    if (reference.empty())
      reference = all;
    else
      v.require(all == reference, fmt::format("bundle differs with {} workers", workers));
  }
  v.note(fmt::format("orth {:.1e}, residual {:.1e}, trace {:.1e}, merge {:.1e}, scale {:.1e}", orth, residual,
                     trace_err, merge_err / kscale, scale_err));
  return v;
}

Verdict histogram() {
  Verdict v;
  const auto& d = desk13();
  const AlignedCloud cloud = align(d.rows);
  const NormHistogram h = norm_histogram(cloud, 40);
  std::size_t total = 0;
  for (std::size_t b = 0; b < h.combined.size(); ++b) {
    v.require(h.alternating[b] + h.nonalternating[b] == h.combined[b], fmt::format("bin {}", b));
    total += h.combined[b];
  }
  v.require(total == cloud.rows(), "counts do not sum to n");
  std::vector<double> alt, non;
  for (std::size_t i = 0; i < cloud.rows(); ++i) (cloud.class_flags[i] ? alt : non).push_back(cloud.norms[i]);
  const double ma = median(alt), mn = median(non);
  v.require(mn < ma, "nonalternating median not below alternating");
  v.note(fmt::format("{} alternating, {} nonalternating, medians {} vs {}", alt.size(), non.size(), format_real(mn),
                     format_real(ma)));
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<Verdict()>>> criteria = {
      {1, small_table}, {2, skein}, {3, mirror_identity}, {4, oracle_equivalence}, {5, torus},
      {6, double_twist}, {7, crossing_filtration_13}, {8, properties}, {9, histogram}};
  int failures = 0;
  for (const auto& [id, run] : criteria) {
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    failures += !v.pass;
    fmt::print("criterion {}: {} {}\n", id, v.pass ? "PASS" : "FAIL", v.detail);
    std::fflush(stdout);
  }
  std::error_code ec;
  fs::remove_all(scratch_dir(), ec);
  return failures == 0 ? 0 : 1;
}
