#include "knotfold/pipeline.hpp"

#include "knotfold/error.hpp"
#include "knotfold/jones.hpp"
#include "knotfold/report.hpp"
#include "knotfold/signature.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <thread>

namespace knotfold {

namespace {

CacheEntry compute_one(const Dataset& ds, const DatasetRecord& r, const ComputeOptions& options) {
  KnotRecord k;
  k.id = r.id;
  k.crossing_number = r.crossing_number;
  k.sigma = r.sigma;
  k.s_invariant = r.s_invariant;
  if (ds.format == InputFormat::family) {
    const FamilySpec spec = parse_family_payload(r.payload);
    k.jones = family_jones(spec);
    k.alternating = r.alternating.value_or(spec.alternating());
  } else {
    k.diagram = *r.diagram;
    k.jones = jones(k.diagram, BracketMode::sweep);
    k.alternating = r.alternating.value_or(is_alternating(k.diagram));
    if (!k.sigma && options.compute_signature) k.sigma = signature_from_diagram(k.diagram);
  }
  if (!k.jones.has_integral_exponents())
    throw Error(ErrorKind::HalfIntegerExponent, "knot Jones polynomial with half-integer exponents");
  const KnotRecord c = canonical_orientation(k, options.rule);
  return {c.id, ds.digest, c.jones, c.sigma, c.alternating, c.mirror_applied};
}

KnotRecord to_record(const DatasetRecord& r, const CacheEntry& e) {
  KnotRecord k;
  k.id = r.id;
  k.crossing_number = r.crossing_number;
  if (r.diagram) k.diagram = e.mirror_applied ? mirror(*r.diagram) : *r.diagram;
  k.alternating = e.alternating;
  k.sigma = e.sigma;
  if (r.s_invariant) k.s_invariant = e.mirror_applied ? -*r.s_invariant : *r.s_invariant;
  k.jones = e.jones;
  k.mirror_applied = e.mirror_applied;
  return k;
}

}  // namespace

std::size_t default_workers() {
  if (const char* env = std::getenv("KNOTFOLD_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

ComputeResult compute_batch(const Dataset& ds, InvariantCache& cache, const ComputeOptions& options) {
  ComputeResult result;
  const std::size_t n = ds.records.size();
  const std::size_t workers = std::max<std::size_t>(1, options.workers);
  constexpr std::size_t kChunk = 512;

  std::vector<std::size_t> todo;
  for (std::size_t i = 0; i < n; ++i)
    if (!cache.find(ds.records[i].id, ds.digest)) todo.push_back(i);
  result.cached = n - todo.size();

  std::vector<std::optional<CacheEntry>> fresh(n);
  std::vector<std::string> errors(n);
  for (std::size_t begin = 0; begin < todo.size(); begin += kChunk) {
    const std::size_t end = std::min(todo.size(), begin + kChunk);
    std::atomic<std::size_t> next{begin};
    auto work = [&] {
      for (std::size_t t = next++; t < end; t = next++) {
        const std::size_t i = todo[t];
        try {
          fresh[i] = compute_one(ds, ds.records[i], options);
        } catch (const Error& e) {
          errors[i] = std::string(to_string(e.kind()));
        } catch (const std::exception&) {
          errors[i] = "Internal";
        }
      }
    };
    std::vector<std::jthread> pool;
    for (std::size_t w = 1; w < std::min(workers, end - begin); ++w) pool.emplace_back(work);
    work();
    pool.clear();

    std::vector<CacheEntry> block;
    for (std::size_t t = begin; t < end; ++t)
      if (fresh[todo[t]]) block.push_back(*fresh[todo[t]]);
    cache.append(block);
    result.computed += block.size();
  }

  for (std::size_t i = 0; i < n; ++i) {
    const DatasetRecord& r = ds.records[i];
    const CacheEntry* e = cache.find(r.id, ds.digest);
    if (e) {
      result.records.push_back(to_record(r, *e));
    } else {
      result.failures.push_back({r.source, r.line, errors[i].empty() ? "Missing" : errors[i], r.payload});
    }
  }

  const std::size_t total = n + ds.rejects.size();
  const std::size_t quarantined = result.failures.size() + ds.rejects.size();
  if (total > 0 && static_cast<double>(quarantined) > options.max_reject_fraction * static_cast<double>(total))
    throw Error(ErrorKind::QuarantineOverflow, std::to_string(quarantined) + " of " + std::to_string(total) +
                                                   " records quarantined");
  return result;
}

Dataset generate_family(FamilyKind kind, int limit, const std::string& dataset_path) {
  if (limit < 3) throw Error(ErrorKind::MalformedInput, "family limit must be at least 3");
  const auto members = enumerate_family(kind, limit);
  {
    std::ofstream out(dataset_path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::Unreadable, "cannot write '" + dataset_path + "'");
    for (const auto& m : members) out << m.id() << ';' << m.crossing_number() << ';' << m.payload() << '\n';
  }
  return ingest({dataset_path}, InputFormat::family);
}

std::string_view to_string(FiltrationKind kind) { return kind == FiltrationKind::crossing ? "crossing" : "norm"; }

std::string_view to_string(ClassFilter filter) {
  switch (filter) {
    case ClassFilter::all:
      return "all";
    case ClassFilter::alternating:
      return "alt";
    case ClassFilter::nonalternating:
      return "nonalt";
  }
  return "?";
}

FiltrationKind parse_filtration(std::string_view text) {
  if (text == "crossing") return FiltrationKind::crossing;
  if (text == "norm") return FiltrationKind::norm;
  throw Error(ErrorKind::MalformedInput, "unknown filtration '" + std::string(text) + "'");
}

ClassFilter parse_class_filter(std::string_view text) {
  if (text == "all") return ClassFilter::all;
  if (text == "alt" || text == "alternating") return ClassFilter::alternating;
  if (text == "nonalt" || text == "nonalternating") return ClassFilter::nonalternating;
  throw Error(ErrorKind::MalformedInput, "unknown class filter '" + std::string(text) + "'");
}

AnalysisOutcome run_analysis(const AnalysisConfig& config) {
  using Clock = std::chrono::steady_clock;
  RunTimings timings;
  auto t0 = Clock::now();
  auto lap = [&](double& slot) {
    const auto now = Clock::now();
    slot = std::chrono::duration<double>(now - t0).count();
    t0 = now;
  };

  AnalysisOutcome outcome;
  outcome.dataset = ingest(config.inputs, config.format, config.convention);
  lap(timings.ingest);
  InvariantCache cache(config.cache_path);
  outcome.computed = compute_batch(outcome.dataset, cache, config.compute);
  lap(timings.compute);

  std::vector<CloudRow> rows;
  rows.reserve(outcome.computed.records.size());
  for (const auto& r : outcome.computed.records) rows.push_back(cloud_row(r));
  if (rows.empty()) throw Error(ErrorKind::EmptyFamily, "no records to analyze");

  std::vector<FiltrationStep> steps;
  AlignedCloud full;
  if (config.filtration == FiltrationKind::crossing) {
    int lo = rows.front().crossing_number, hi = lo;
    for (const auto& r : rows) {
      lo = std::min(lo, r.crossing_number);
      hi = std::max(hi, r.crossing_number);
    }
    steps = crossing_filtration(rows, config.k_min.value_or(lo), config.k_max.value_or(hi), config.class_filter);
    for (auto it = steps.rbegin(); it != steps.rend(); ++it)
      if (!it->empty) {
        full = it->cloud;
        break;
      }
    if (full.rows() == 0) throw Error(ErrorKind::EmptyFamily, "every filtration step is empty");
  } else {
    std::vector<CloudRow> kept;
    for (const auto& r : rows) {
      const bool ok = config.class_filter == ClassFilter::all ||
                      (config.class_filter == ClassFilter::alternating) == r.alternating;
      if (ok) kept.push_back(r);
    }
    full = align(kept);
    steps = norm_filtration(full, config.levels);
  }
  outcome.report = eigensystem_trajectory(steps, config.threshold, config.tracked);
  lap(timings.analysis);

  outcome.histogram = norm_histogram(full, config.bins);
  const StepAnalysis& last = outcome.report.steps.back();
  const std::size_t k = std::min(config.projection_dims, last.eigen.vectors.rows);
  const Matrix projection = project(full, last.mean, last.eigen, k);

  ReportBundle bundle{config, outcome.dataset, outcome.computed, outcome.report, outcome.histogram, full, projection};
  write_report(config.out_dir, bundle, config.timings ? &timings : nullptr);
  return outcome;
}

}  // namespace knotfold
