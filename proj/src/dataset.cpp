#include "knotfold/dataset.hpp"

#include "knotfold/error.hpp"
#include "knotfold/families.hpp"

#include <openssl/evp.h>

#include <charconv>
#include <fstream>
#include <iterator>
#include <memory>
#include <ostream>

namespace knotfold {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = text.find(sep, start);
    out.push_back(text.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, const char* what) {
  s = trim(s);
  int v = 0;
  const char* first = s.data();
  if (!s.empty() && *first == '+') ++first;
  auto [p, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size())
    throw Error(ErrorKind::NonInteger, std::string(what) + " '" + std::string(s) + "' is not an integer");
  return v;
}

bool parse_flag(std::string_view s) {
  s = trim(s);
  if (s == "1" || s == "true" || s == "yes") return true;
  if (s == "0" || s == "false" || s == "no") return false;
  throw Error(ErrorKind::MalformedInput, "flag '" + std::string(s) + "' is not 0/1");
}

DatasetRecord parse_line(std::string_view text, InputFormat format, DtSignConvention convention) {
  const auto fields = split(text, ';');
  if (fields.size() < 3)
    throw Error(ErrorKind::MalformedInput, "expected name;crossing_number;payload");
  DatasetRecord r;
  r.id = std::string(trim(fields[0]));
  if (r.id.empty()) throw Error(ErrorKind::MalformedInput, "empty knot name");
  r.crossing_number = parse_int(fields[1], "crossing number");
  if (r.crossing_number < 0) throw Error(ErrorKind::MalformedInput, "negative crossing number");
  r.payload = std::string(trim(fields[2]));
  for (std::size_t i = 3; i < fields.size(); ++i) {
    const auto kv = trim(fields[i]);
    if (kv.empty()) continue;
    const auto eq = kv.find('=');
    if (eq == std::string_view::npos) throw Error(ErrorKind::MalformedInput, "metadata must be key=value");
    const auto key = trim(kv.substr(0, eq));
    const auto value = trim(kv.substr(eq + 1));
    if (value.empty()) continue;  // explicit unknown
    if (key == "sigma")
      r.sigma = parse_int(value, "sigma");
    else if (key == "s")
      r.s_invariant = parse_int(value, "s");
    else if (key == "alternating")
      r.alternating = parse_flag(value);
    else
      throw Error(ErrorKind::MalformedInput, "unknown metadata key '" + std::string(key) + "'");
  }
  switch (format) {
    case InputFormat::dt:
      r.diagram = realize_dt(parse_dt(r.payload), convention);
      break;
    case InputFormat::pd:
      r.diagram = parse_pd(r.payload);
      break;
    case InputFormat::family:
      parse_family_payload(r.payload);
      break;
  }
  if (r.diagram && r.diagram->component_count() != 1)
    throw Error(ErrorKind::Unsupported, "input describes a link, not a knot");
  return r;
}

}  // namespace

InputFormat parse_format(std::string_view text) {
  if (text == "dt") return InputFormat::dt;
  if (text == "pd") return InputFormat::pd;
  if (text == "family") return InputFormat::family;
  throw Error(ErrorKind::UnknownFormat, "unknown input format '" + std::string(text) + "'");
}

std::string_view to_string(InputFormat format) {
  switch (format) {
    case InputFormat::dt:
      return "dt";
    case InputFormat::pd:
      return "pd";
    case InputFormat::family:
      return "family";
  }
  return "?";
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorKind::Unreadable, "SHA-256 digest failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

Dataset ingest(const std::vector<std::string>& paths, InputFormat format, DtSignConvention convention) {
  Dataset ds;
  ds.paths = paths;
  ds.format = format;
  ds.convention = convention;
  std::string all_bytes;
  for (const auto& path : paths) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::Unreadable, "cannot read '" + path + "'");
    const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    all_bytes += bytes;

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start < bytes.size()) {
      std::size_t end = bytes.find('\n', start);
      if (end == std::string::npos) end = bytes.size();
      const std::string_view line = trim(std::string_view(bytes).substr(start, end - start));
      start = end + 1;
      ++line_no;
      if (line.empty() || line.front() == '#') continue;
      try {
        DatasetRecord r = parse_line(line, format, convention);
        r.source = path;
        r.line = line_no;
        ds.has_sigma = ds.has_sigma || r.sigma.has_value();
        ds.has_s = ds.has_s || r.s_invariant.has_value();
        ds.has_alternating = ds.has_alternating || r.alternating.has_value();
        ds.records.push_back(std::move(r));
      } catch (const Error& e) {
        ds.rejects.push_back({path, line_no, std::string(to_string(e.kind())), std::string(line)});
      }
    }
  }
  ds.digest = sha256_hex(all_bytes);
  return ds;
}

void write_rejects(std::ostream& out, const std::vector<Reject>& rejects) {
  out << "source,line,reason,text\n";
  for (const auto& r : rejects) {
    std::string text = r.text;
    for (char& c : text)
      if (c == '"') c = '\'';
    out << r.source << ',' << r.line << ',' << r.reason << ",\"" << text << "\"\n";
  }
}

}  // namespace knotfold
