#include "aitgl/string_set.hpp"

#include <algorithm>

namespace aitgl {

bool StringSet::insert(const BitString& x) {
  if (!index_.insert(x.str()).second) return false;
  members_.push_back(x);
  per_length_[x.length()]++;
  return true;
}

std::size_t StringSet::count_at(std::size_t len) const {
  auto it = per_length_.find(len);
  return it == per_length_.end() ? 0 : it->second;
}

std::size_t StringSet::max_length() const {
  std::size_t m = 0;
  for (const auto& [len, cnt] : per_length_) {
    if (cnt > 0) m = std::max(m, len);
  }
  return m;
}

std::size_t width_of(const StringSet& s, std::size_t max_len) {
  std::size_t w = 0;
  for (const auto& [len, cnt] : s.per_length()) {
    if (len <= max_len) w = std::max(w, cnt);
  }
  return w;
}

bool is_leafless(const StringSet& s, std::size_t depth) {
  for (const BitString& x : s.members()) {
    if (x.length() >= depth) continue;
    if (!s.contains(x.append(0)) && !s.contains(x.append(1))) return false;
  }
  return true;
}

std::vector<Path> maximal_paths(const StringSet& s, std::size_t depth) {
  std::vector<BitString> ends;
  for (const BitString& x : s.members()) {
    if (x.length() == depth) ends.push_back(x);
  }
  std::sort(ends.begin(), ends.end(), ShortlexLess{});

  std::vector<Path> paths;
  for (const BitString& end : ends) {
    std::vector<BitString> up;
    BitString cur = end;
    up.push_back(cur);
    while (auto p = cur.parent()) {
      if (!s.contains(*p)) break;
      cur = *p;
      up.push_back(cur);
    }
    Path path;
    path.vertices.assign(up.rbegin(), up.rend());
    paths.push_back(std::move(path));
  }
  return paths;
}

}  // namespace aitgl
