#include "aitgl/trimmer.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

namespace aitgl {

namespace {

struct LevelView {
  // strings bucketed by length, as raw '0'/'1' text
  std::vector<std::vector<std::string>> levels;

  explicit LevelView(std::size_t depth) : levels(depth + 1) {}

  void add(const BitString& x) { levels[x.length()].push_back(x.str()); }

  void finish() {
    for (auto& level : levels) {
      std::sort(level.begin(), level.end());
      level.erase(std::unique(level.begin(), level.end()), level.end());
    }
  }
};

class AcceptableSearch {
 public:
  AcceptableSearch(const StringSet& E, const StringSet& S_j, std::uint64_t w,
                   std::uint64_t depth)
      : w_(w), e_(depth), s_(depth) {
    for (const BitString& x : E.members()) {
      if (x.length() > depth) throw std::invalid_argument("member longer than depth");
      e_.add(x);
      top_ = std::max(top_, x.length());
    }
    for (const BitString& x : S_j.members()) {
      if (x.length() > depth) throw std::invalid_argument("member longer than depth");
      s_.add(x);
      top_ = std::max(top_, x.length());
    }
    e_.finish();
    s_.finish();
  }

  bool run() { return descend(0, {}); }

 private:
  std::uint64_t w_;
  LevelView e_, s_;
  std::size_t top_ = 0;  // above this length candidates continue with zeros
  std::set<std::pair<std::size_t, std::string>> failed_;

  std::size_t union_count(const std::vector<std::string>& a, std::size_t level) const {
    const auto& b = s_.levels[level];
    std::size_t n = a.size() + b.size();
    for (const auto& x : a) {
      if (std::binary_search(b.begin(), b.end(), x)) --n;
    }
    return n;
  }

  // prev holds the chosen set at level - 1 (sorted); returns whether the
  // candidate can be completed from this level on
  bool descend(std::size_t level, const std::vector<std::string>& prev) {
    if (level > top_) return true;

    std::string key;
    for (const auto& x : prev) {
      key += x;
      key += ',';
    }
    if (failed_.count({level, key})) return false;

    const auto& forced = e_.levels[level];
    std::vector<std::string> uncovered;
    for (const auto& x : prev) {
      if (!std::binary_search(forced.begin(), forced.end(), x + '0') &&
          !std::binary_search(forced.begin(), forced.end(), x + '1')) {
        uncovered.push_back(x);
      }
    }

    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << uncovered.size());
         ++mask) {
      std::vector<std::string> chosen = forced;
      for (std::size_t i = 0; i < uncovered.size(); ++i) {
        chosen.push_back(uncovered[i] + ((mask >> i) & 1 ? '1' : '0'));
      }
      std::sort(chosen.begin(), chosen.end());
      chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
      if (union_count(chosen, level) > w_) continue;
      if (descend(level + 1, chosen)) return true;
    }
    failed_.insert({level, key});
    return false;
  }
};

}  // namespace

bool acceptable_at(const StringSet& E, const StringSet& S_j, std::uint64_t w,
                   std::uint64_t depth) {
  return AcceptableSearch(E, S_j, w, depth).run();
}

namespace {

StringSet greedy_largest(const StringSet& S_j, std::uint64_t w, std::uint64_t depth,
                         std::vector<TrimDecision>* log) {
  StringSet T;
  for (std::uint64_t len = 0; len <= depth; ++len) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << len); ++code) {
      std::string text(len, '0');
      for (std::uint64_t i = 0; i < len; ++i) {
        if (code & (std::uint64_t{1} << (len - 1 - i))) text[i] = '1';
      }
      BitString x = *BitString::parse(text);
      StringSet E = T;
      E.insert(x);
      bool ok = acceptable_at(E, S_j, w, depth);
      if (ok) T.insert(x);
      if (log) log->push_back({x, ok});
    }
  }
  return T;
}

}  // namespace

StringSet largest_acceptable_at(const StringSet& S_j, std::uint64_t w,
                                std::uint64_t depth) {
  return greedy_largest(S_j, w, depth, nullptr);
}

TrimResult trim(const std::vector<BitString>& enumeration, const TrimConfig& cfg) {
  TrimResult result;
  std::size_t take = std::min<std::size_t>(enumeration.size(), cfg.horizon);
  for (std::size_t i = 0; i < take; ++i) {
    if (enumeration[i].length() <= cfg.depth) result.input.insert(enumeration[i]);
  }
  result.T = greedy_largest(result.input, cfg.w, cfg.depth, &result.log);
  return result;
}

}  // namespace aitgl
