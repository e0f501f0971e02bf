#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "farey/metric.hpp"
#include "farey/slope.hpp"

namespace farey {

// One cached distance with the safety window it was computed under. The
// slope pair is stored in (b, a)-lexicographic order.
struct CacheEntry {
  Slope s, t;
  int dist = 0;
  long long windowA = 1, windowB = 1;
};

// Append-only text cache, one entry per line: "b/a b'/a' d windowA windowB".
// Text keeps the file diffable; compaction rewrites it in sorted normal form
// via atomic rename. Single-writer contract: concurrent CLI runs may append,
// but only one process should compact at a time.
class DistanceCache {
 public:
  // Missing files load as an empty cache.
  static DistanceCache load(const std::string& path);

  // Serves an entry only when its provenance window covers the required
  // safety window of the query.
  std::optional<int> lookup(const Slope& s, const Slope& t, const Window& required) const;

  // Keeps the entry with the dominating provenance window.
  void insert(CacheEntry e);

  static void append_entry(const std::string& path, const CacheEntry& e);

  // Sorted, deduplicated rewrite; atomic rename onto `path`.
  void write_compacted(const std::string& path) const;

  std::size_t size() const { return entries_.size(); }

 private:
  static std::pair<Slope, Slope> ordered(Slope a, Slope b);
  static std::string format_entry(const CacheEntry& e);

  std::map<std::pair<Slope, Slope>, CacheEntry> entries_;
};

}  // namespace farey
