#include "aitgl/token_labeler.hpp"

#include <algorithm>
#include <stdexcept>

namespace aitgl {

TokenBoard::ObserveResult TokenBoard::observe(const BitString& x) {
  ObserveResult res;
  for (const BitString& seen : observed_) {
    if (seen == x) {
      res.status = ObserveResult::Status::duplicate;
      return res;
    }
  }
  observed_.push_back(x);

  // prefix of a distinguished vertex: nothing to do
  for (const BitString& pos : position_) {
    if (x.is_prefix_of(pos)) {
      res.event.kind = TokenEvent::Kind::no_op;
      return res;
    }
  }

  // extension of a distinguished vertex: move that token
  int owner = 0;
  for (std::size_t i = 0; i < position_.size(); ++i) {
    if (position_[i].is_proper_prefix_of(x)) {
      if (owner != 0) {
        // pairwise inconsistency of distinguished vertices rules this out
        throw std::logic_error("token board corrupted: ambiguous extension");
      }
      owner = static_cast<int>(i) + 1;
    }
  }
  if (owner != 0) {
    res.event.kind = TokenEvent::Kind::moved;
    res.event.token = owner;
    res.event.from = position_[owner - 1];
    res.event.to = x;
    position_[owner - 1] = x;
    history_[owner - 1].push_back(x);
    return res;
  }

  // inconsistent with everything distinguished: new token
  int token = next_token_++;
  position_.push_back(x);
  history_.emplace_back();
  history_.back().push_back(x);
  res.event.kind = TokenEvent::Kind::placed;
  res.event.token = token;
  res.event.to = x;
  if (static_cast<std::uint64_t>(tokens_used()) > w_) {
    res.status = ObserveResult::Status::capacity_exceeded;
  }
  return res;
}

std::optional<BitString> TokenBoard::decode_path(int token, std::uint64_t n) const {
  if (token < 1 || token >= next_token_) return std::nullopt;
  const BitString& pos = position_[token - 1];
  if (pos.length() < n) return std::nullopt;
  return pos.prefix(n);
}

std::optional<BitString> TokenBoard::token_position(int token) const {
  if (token < 1 || token >= next_token_) return std::nullopt;
  return position_[token - 1];
}

std::vector<std::pair<BitString, int>> TokenBoard::distinguished() const {
  std::vector<std::pair<BitString, int>> out;
  out.reserve(position_.size());
  for (std::size_t i = 0; i < position_.size(); ++i) {
    out.emplace_back(position_[i], static_cast<int>(i) + 1);
  }
  return out;
}

void TokenBoard::reset(std::uint64_t w) {
  w_ = w;
  next_token_ = 1;
  position_.clear();
  for (auto& h : history_) h.clear();
  history_.clear();
  observed_.clear();
}

}  // namespace aitgl
