#include "farey/cache.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "farey/text_format.hpp"

namespace farey {

std::pair<Slope, Slope> DistanceCache::ordered(Slope a, Slope b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

std::string DistanceCache::format_entry(const CacheEntry& e) {
  return to_string(e.s) + " " + to_string(e.t) + " " + std::to_string(e.dist) + " " +
         std::to_string(e.windowA) + " " + std::to_string(e.windowB) + "\n";
}

DistanceCache DistanceCache::load(const std::string& path) {
  DistanceCache cache;
  std::ifstream in(path);
  if (!in) return cache;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string s_text, t_text;
    CacheEntry e;
    if (!(fields >> s_text >> t_text >> e.dist >> e.windowA >> e.windowB))
      throw Error(ErrorKind::kArgument,
                  "cache " + path + ": malformed line " + std::to_string(line_no));
    e.s = parse_slope(s_text);
    e.t = parse_slope(t_text);
    cache.insert(std::move(e));
  }
  return cache;
}

std::optional<int> DistanceCache::lookup(const Slope& s, const Slope& t,
                                         const Window& required) const {
  auto it = entries_.find(ordered(s, t));
  if (it == entries_.end()) return std::nullopt;
  const CacheEntry& e = it->second;
  if (e.windowA < required.maxA || e.windowB < required.maxB) return std::nullopt;
  return e.dist;
}

void DistanceCache::insert(CacheEntry e) {
  auto key = ordered(e.s, e.t);
  e.s = key.first;
  e.t = key.second;
  auto [it, inserted] = entries_.try_emplace(key, e);
  if (!inserted && e.windowA >= it->second.windowA && e.windowB >= it->second.windowB)
    it->second = e;
}

void DistanceCache::append_entry(const std::string& path, const CacheEntry& e) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw Error(ErrorKind::kComputation, "cannot open cache " + path);
  CacheEntry normalized = e;
  auto key = ordered(e.s, e.t);
  normalized.s = key.first;
  normalized.t = key.second;
  out << format_entry(normalized);
  if (!out) throw Error(ErrorKind::kComputation, "cannot write cache " + path);
}

void DistanceCache::write_compacted(const std::string& path) const {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error(ErrorKind::kComputation, "cannot open " + tmp);
    for (const auto& [key, e] : entries_) out << format_entry(e);
    if (!out) throw Error(ErrorKind::kComputation, "cannot write " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw Error(ErrorKind::kComputation, "cannot rename " + tmp + " onto " + path);
}

}  // namespace farey
