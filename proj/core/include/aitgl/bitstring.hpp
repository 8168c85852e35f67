#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace aitgl {

// A finite word over {0,1}. The empty string is the tree root.
class BitString {
 public:
  BitString() = default;

  // Accepts only '0'/'1' characters; the empty string parses to the root.
  static std::optional<BitString> parse(std::string_view text);

  static BitString zeros(std::size_t n) { return BitString(std::string(n, '0')); }
  static BitString ones(std::size_t n) { return BitString(std::string(n, '1')); }

  std::size_t length() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }

  // i-th bit as 0 or 1; i < length().
  int bit(std::size_t i) const { return bits_[i] == '1' ? 1 : 0; }

  BitString append(int b) const;
  BitString concat(const BitString& other) const;
  BitString prefix(std::size_t n) const;
  std::optional<BitString> parent() const;

  bool is_prefix_of(const BitString& other) const;
  bool is_proper_prefix_of(const BitString& other) const;
  // true iff one of the two is a prefix of the other
  bool consistent_with(const BitString& other) const;

  const std::string& str() const { return bits_; }

  friend bool operator==(const BitString& a, const BitString& b) = default;

 private:
  explicit BitString(std::string bits) : bits_(std::move(bits)) {}
  std::string bits_;  // chars in {'0','1'}
};

std::strong_ordering shortlex_compare(const BitString& a, const BitString& b);

struct ShortlexLess {
  bool operator()(const BitString& a, const BitString& b) const {
    return shortlex_compare(a, b) < 0;
  }
};

}  // namespace aitgl
