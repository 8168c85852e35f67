#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "aitgl/bitstring.hpp"

namespace aitgl {

struct TokenEvent {
  enum class Kind { no_op, moved, placed };
  Kind kind = Kind::no_op;
  int token = 0;  // 0 for no_op
  BitString from;
  BitString to;
};

// Online labeling of a leafless width-bounded set under enumeration: at most
// w tokens sit on pairwise-inconsistent distinguished vertices, every
// observed string is a prefix of some distinguished vertex, and tokens only
// move to extensions of their current position.
class TokenBoard {
 public:
  explicit TokenBoard(std::uint64_t w) : w_(w) {}

  struct ObserveResult {
    enum class Status { ok, duplicate, capacity_exceeded };
    Status status = Status::ok;
    TokenEvent event;
    bool accepted() const { return status != Status::duplicate; }
  };

  // Processes one newly enumerated string. Duplicates are rejected. Needing
  // more than w tokens is reported as capacity_exceeded (the observed set
  // broke its width/leaflessness promise) but the placement still happens so
  // the trace stays inspectable.
  ObserveResult observe(const BitString& x);

  // First n bits of token i's position if it is long enough, else "pending".
  std::optional<BitString> decode_path(int token, std::uint64_t n) const;

  std::uint64_t capacity() const { return w_; }
  int tokens_used() const { return next_token_ - 1; }
  std::optional<BitString> token_position(int token) const;
  const std::vector<std::vector<BitString>>& histories() const { return history_; }

  // distinguished vertices with their token ids, in token order
  std::vector<std::pair<BitString, int>> distinguished() const;

  const std::vector<BitString>& observed() const { return observed_; }

  // Drops all state but keeps buffer capacity; used by bulk replay tests.
  void reset(std::uint64_t w);

 private:
  std::uint64_t w_;
  int next_token_ = 1;
  std::vector<BitString> position_;  // position_[i-1] = token i's vertex
  std::vector<std::vector<BitString>> history_;
  std::vector<BitString> observed_;
};

}  // namespace aitgl
