#include "knotfold/cache.hpp"

#include "knotfold/error.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iterator>

namespace knotfold {

std::string format_entry(const CacheEntry& e) {
  std::string out = e.id;
  out += ';';
  out += e.digest;
  out += ';';
  out += e.jones.to_string();
  out += ';';
  if (e.sigma) out += std::to_string(*e.sigma);
  out += ';';
  out += e.alternating ? '1' : '0';
  out += ';';
  out += e.mirror_applied ? '1' : '0';
  return out;
}

CacheEntry parse_entry(std::string_view line) {
  std::vector<std::string_view> f;
  std::size_t start = 0;
  while (true) {
    const auto at = line.find(';', start);
    f.push_back(line.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  if (f.size() != 6) throw Error(ErrorKind::MalformedInput, "cache line needs 6 fields");
  auto flag = [](std::string_view s) {
    if (s == "1") return true;
    if (s == "0") return false;
    throw Error(ErrorKind::MalformedInput, "cache flag must be 0 or 1");
  };
  CacheEntry e;
  e.id = std::string(f[0]);
  e.digest = std::string(f[1]);
  e.jones = LaurentPolynomial::parse(f[2], Variable::q);
  if (!f[3].empty()) {
    int v = 0;
    auto [p, ec] = std::from_chars(f[3].data(), f[3].data() + f[3].size(), v);
    if (ec != std::errc() || p != f[3].data() + f[3].size())
      throw Error(ErrorKind::MalformedInput, "cache sigma is not an integer");
    e.sigma = v;
  }
  e.alternating = flag(f[4]);
  e.mirror_applied = flag(f[5]);
  return e;
}

InvariantCache::InvariantCache(std::string path) : path_(std::move(path)) {
  if (!path_.empty()) load();
}

void InvariantCache::load() {
  std::ifstream in(path_, std::ios::binary);
  if (!in) return;  // no cache yet
  const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::size_t start = 0;
  while (true) {
    const std::size_t end = bytes.find('\n', start);
    if (end == std::string::npos) break;
    const std::string_view line = std::string_view(bytes).substr(start, end - start);
    if (!line.empty()) {
      CacheEntry e = parse_entry(line);
      auto key = std::make_pair(e.id, e.digest);
      entries_.insert_or_assign(std::move(key), std::move(e));
    }
    start = end + 1;
  }
  valid_bytes_ = start;
  needs_truncate_ = start < bytes.size();
}

const CacheEntry* InvariantCache::find(const std::string& id, const std::string& digest) const {
  auto it = entries_.find({id, digest});
  return it == entries_.end() ? nullptr : &it->second;
}

void InvariantCache::append(const std::vector<CacheEntry>& entries) {
  if (!path_.empty()) {
    if (needs_truncate_) {
      std::filesystem::resize_file(path_, valid_bytes_);
      needs_truncate_ = false;
    }
    std::ofstream out(path_, std::ios::binary | std::ios::app);
    if (!out) throw Error(ErrorKind::Unreadable, "cannot write cache '" + path_ + "'");
    std::string block;
    for (const auto& e : entries) {
      block += format_entry(e);
      block += '\n';
    }
    out << block;
    out.flush();
    if (!out) throw Error(ErrorKind::Unreadable, "failed writing cache '" + path_ + "'");
    valid_bytes_ += block.size();
  }
  for (const auto& e : entries) entries_.insert_or_assign({e.id, e.digest}, e);
}

}  // namespace knotfold
