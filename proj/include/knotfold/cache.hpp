#pragma once

#include "knotfold/laurent.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace knotfold {

/// One cached, already canonicalized invariant.
struct CacheEntry {
  std::string id;
  std::string digest;
  LaurentPolynomial jones{Variable::q};
  std::optional<int> sigma;
  bool alternating = true;
  bool mirror_applied = false;

  friend bool operator==(const CacheEntry&, const CacheEntry&) = default;
};

/// `id;digest;jones;sigma;alternating;mirror_applied` (sigma empty when unknown).
std::string format_entry(const CacheEntry& e);
/// Throws Error(MalformedInput).
CacheEntry parse_entry(std::string_view line);

/// Append-only line store keyed by (id, dataset digest). A path of "" keeps
/// everything in memory. A trailing line without a newline (an interrupted
/// write) is ignored on load and cut off before the next append.
class InvariantCache {
 public:
  explicit InvariantCache(std::string path = "");

  const std::string& path() const noexcept { return path_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const CacheEntry* find(const std::string& id, const std::string& digest) const;

  /// Writes and flushes every entry, in order.
  void append(const std::vector<CacheEntry>& entries);

 private:
  void load();

  std::string path_;
  std::map<std::pair<std::string, std::string>, CacheEntry> entries_;
  std::size_t valid_bytes_ = 0;
  bool needs_truncate_ = false;
};

}  // namespace knotfold
