#include "aitgl/bitstring.hpp"

namespace aitgl {

std::optional<BitString> BitString::parse(std::string_view text) {
  for (char c : text) {
    if (c != '0' && c != '1') return std::nullopt;
  }
  return BitString(std::string(text));
}

BitString BitString::append(int b) const {
  std::string s = bits_;
  s.push_back(b ? '1' : '0');
  return BitString(std::move(s));
}

BitString BitString::concat(const BitString& other) const {
  return BitString(bits_ + other.bits_);
}

BitString BitString::prefix(std::size_t n) const {
  return BitString(bits_.substr(0, n));
}

std::optional<BitString> BitString::parent() const {
  if (bits_.empty()) return std::nullopt;
  return BitString(bits_.substr(0, bits_.size() - 1));
}

bool BitString::is_prefix_of(const BitString& other) const {
  return bits_.size() <= other.bits_.size() &&
         other.bits_.compare(0, bits_.size(), bits_) == 0;
}

bool BitString::is_proper_prefix_of(const BitString& other) const {
  return bits_.size() < other.bits_.size() && is_prefix_of(other);
}

bool BitString::consistent_with(const BitString& other) const {
  return is_prefix_of(other) || other.is_prefix_of(*this);
}

std::strong_ordering shortlex_compare(const BitString& a, const BitString& b) {
  if (a.length() != b.length()) return a.length() <=> b.length();
  return a.str().compare(b.str()) <=> 0;
}

}  // namespace aitgl
