#pragma once

#include "knotfold/diagram.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace knotfold {

enum class InputFormat { dt, pd, family };

/// "dt", "pd" or "family". Throws Error(UnknownFormat).
InputFormat parse_format(std::string_view text);
std::string_view to_string(InputFormat format);

/// One parsed input line: `name;crossing_number;payload[;key=value...]` with
/// optional keys sigma, s and alternating (0/1/true/false).
struct DatasetRecord {
  std::string source;
  std::size_t line = 0;
  std::string id;
  int crossing_number = 0;
  std::string payload;
  std::optional<int> sigma;
  std::optional<int> s_invariant;
  std::optional<bool> alternating;
  std::optional<PlanarDiagram> diagram;  // dt and pd inputs
};

struct Reject {
  std::string source;
  std::size_t line = 0;
  std::string reason;
  std::string text;
};

struct Dataset {
  std::vector<std::string> paths;
  InputFormat format = InputFormat::dt;
  DtSignConvention convention = DtSignConvention::a;
  std::string digest;  // SHA-256 over the bytes of every file, in order
  std::vector<DatasetRecord> records;
  std::vector<Reject> rejects;
  bool has_sigma = false;
  bool has_s = false;
  bool has_alternating = false;
};

/// Throws Error(Unreadable) for missing files; malformed lines are rejected
/// with their line numbers. Blank lines and lines starting with '#' are skipped.
Dataset ingest(const std::vector<std::string>& paths, InputFormat format,
               DtSignConvention convention = DtSignConvention::a);

std::string sha256_hex(std::string_view bytes);

/// `source,line,reason,text` CSV.
void write_rejects(std::ostream& out, const std::vector<Reject>& rejects);

}  // namespace knotfold
