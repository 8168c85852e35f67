#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "aitgl/bitstring.hpp"

namespace aitgl {

// A finite set of bit strings kept in arrival order, with per-length counts.
class StringSet {
 public:
  StringSet() = default;

  // Returns false (and leaves the set unchanged) on duplicates.
  bool insert(const BitString& x);
  bool contains(const BitString& x) const { return index_.count(x.str()) != 0; }

  const std::vector<BitString>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  std::size_t count_at(std::size_t len) const;
  const std::map<std::size_t, std::size_t>& per_length() const { return per_length_; }
  std::size_t max_length() const;

 private:
  std::vector<BitString> members_;
  std::set<std::string> index_;
  std::map<std::size_t, std::size_t> per_length_;
};

// max over n <= max_len of the number of members of length n
std::size_t width_of(const StringSet& s, std::size_t max_len);

// Every member of length < depth must have at least one child in the set.
// Members at length == depth are exempt (truncation boundary).
bool is_leafless(const StringSet& s, std::size_t depth);

struct Path {
  std::vector<BitString> vertices;  // consecutive one-bit extensions
};

// All chains in s ending at length == depth whose first vertex has no parent
// in s. Each length-depth member determines exactly one such chain (parents
// are unique), so paths are returned sorted by their final vertex.
std::vector<Path> maximal_paths(const StringSet& s, std::size_t depth);

}  // namespace aitgl
