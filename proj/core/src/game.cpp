#include "aitgl/game.hpp"

#include <algorithm>

namespace aitgl {

GameState::ApplyResult GameState::apply(Player p, const Move& m) {
  ApplyResult res;
  if (p != turn_) {
    res.ok = false;
    res.error = "move out of turn";
    return res;
  }
  if (m.is_paint) {
    const std::string& s = m.target.str();
    std::uint64_t len = m.target.length();
    if (p == Player::alice) {
      auto& level = green_[len];
      if (!level.count(s)) {
        if (level.size() >= w_) {
          res.ok = false;
          res.error = "alice painted more than w strings of one length";
          res.violated_length = len;
          return res;
        }
        level.insert(s);
        max_green_length_ = std::max(max_green_length_, len);
        if (red_.count(len) && red_[len].count(s)) both_[len].insert(s);
      }
    } else {
      auto& level = red_[len];
      if (level.insert(s).second) {
        if (green_.count(len) && green_[len].count(s)) both_[len].insert(s);
      }
    }
  }
  turn_ = (turn_ == Player::alice) ? Player::bob : Player::alice;
  return res;
}

bool GameState::is_green(const BitString& x) const {
  auto it = green_.find(x.length());
  return it != green_.end() && it->second.count(x.str());
}

bool GameState::is_red(const BitString& x) const {
  auto it = red_.find(x.length());
  return it != red_.end() && it->second.count(x.str());
}

std::uint64_t GameState::green_count_at(std::uint64_t len) const {
  auto it = green_.find(len);
  return it == green_.end() ? 0 : it->second.size();
}

std::uint64_t GameState::red_count_at(std::uint64_t len) const {
  auto it = red_.find(len);
  return it == red_.end() ? 0 : it->second.size();
}

std::optional<std::uint64_t> GameState::win_by_coincidence() const {
  for (const auto& [len, strings] : both_) {
    if (strings.size() >= w_) return len;
  }
  return std::nullopt;
}

std::optional<std::uint64_t> GameState::coincidence_in_subtree(
    const BitString& root, std::uint64_t need) const {
  const std::string& prefix = root.str();
  for (const auto& [len, strings] : both_) {
    if (len < root.length()) continue;
    std::uint64_t count = 0;
    for (const std::string& s : strings) {
      if (s.compare(0, prefix.size(), prefix) == 0 && ++count >= need) return len;
    }
  }
  return std::nullopt;
}

GameState::Diagnostic GameState::lexfirst_green_diagnostic(std::uint64_t depth) const {
  Diagnostic d;
  for (std::uint64_t n = 0; n <= depth; ++n) {
    auto it = green_.find(n);
    if (it == green_.end() || it->second.empty()) break;
    BitString pick = *BitString::parse(*it->second.begin());
    if (!d.chain.empty() && !d.chain.back().is_proper_prefix_of(pick)) break;
    d.chain.push_back(pick);
  }
  d.consistent_to = static_cast<std::int64_t>(d.chain.size()) - 1;
  for (const BitString& x : d.chain) {
    if (!is_red(x)) ++d.non_red_count;
  }
  return d;
}

AliceStrategy::AliceStrategy(std::uint64_t w)
    : w_(w),
      paint_log_(std::make_shared<std::vector<PaintRecord>>()),
      run_id_(0),
      parent_run_id_(-1),
      next_run_id_(&owned_next_run_id_) {}

AliceStrategy::AliceStrategy(std::uint64_t w, BitString root,
                             std::shared_ptr<std::vector<PaintRecord>> log,
                             int run_id, int parent_run_id, int* next_run_id)
    : w_(w),
      root_(std::move(root)),
      paint_log_(std::move(log)),
      run_id_(run_id),
      parent_run_id_(parent_run_id),
      next_run_id_(next_run_id) {}

Move AliceStrategy::record(const BitString& target) {
  paint_log_->push_back({run_id_, parent_run_id_, target});
  return Move::paint(target);
}

Move AliceStrategy::next(const GameState& state) {
  if (!root_painted_) {
    root_painted_ = true;
    return record(root_);
  }
  if (w_ == 1) {
    ++zero_run_;
    return record(root_.concat(BitString::zeros(zero_run_)));
  }
  if (!pending_.empty()) {
    BitString x = pending_.front();
    pending_.pop_front();
    return record(x);
  }
  if (!inner_) {
    inner_.reset(new AliceStrategy(w_ - 1, root_.append(1), paint_log_,
                                   (*next_run_id_)++, run_id_, next_run_id_));
  }
  if (state.coincidence_in_subtree(inner_->root_, inner_->w_)) {
    // the inner run won in the first way: stop it, extend the zero chain past
    // every painted length, restart under the next 0^m·1
    std::uint64_t m = state.max_green_length() + 1 - root_.length();
    for (std::uint64_t i = chain_len_ + 1; i <= m; ++i) {
      pending_.push_back(root_.concat(BitString::zeros(i)));
    }
    chain_len_ = m;
    inner_.reset(new AliceStrategy(
        w_ - 1, root_.concat(BitString::zeros(m)).append(1), paint_log_,
        (*next_run_id_)++, run_id_, next_run_id_));
    BitString x = pending_.front();
    pending_.pop_front();
    return record(x);
  }
  return inner_->next(state);
}

Move CopycatBob::next(const GameState& state) {
  for (const auto& [len, strings] : state.green_by_length()) {
    for (const std::string& s : strings) {
      BitString x = *BitString::parse(s);
      if (!state.is_red(x)) return Move::paint(x);
    }
  }
  return Move::pass();
}

BlindBob::BlindBob(std::uint64_t f, std::uint64_t max_len)
    : dovetailer_(f == 0 ? 0 : f - 1, max_len) {}

Move BlindBob::next(const GameState&) {
  if (queue_.empty()) {
    for (const BitString& x : dovetailer_.advance_round()) queue_.push_back(x);
  }
  if (queue_.empty()) return Move::pass();
  BitString x = queue_.front();
  queue_.pop_front();
  return Move::paint(x);
}

Move ScriptBob::next(const GameState&) {
  if (cursor_ >= moves_.size()) return Move::pass();
  return moves_[cursor_++];
}

GameTrace play(std::uint64_t w, AliceStrategy& alice, BobStrategy& bob,
               std::uint64_t horizon, std::uint64_t diagnostic_depth) {
  GameTrace trace;
  GameState state(w);
  for (std::uint64_t ply = 1; ply <= horizon; ++ply) {
    Player p = (ply % 2 == 1) ? Player::alice : Player::bob;
    Move m = (p == Player::alice) ? alice.next(state) : bob.next(state);
    auto res = state.apply(p, m);
    if (!res.ok) {
      trace.rule_violation = true;
      trace.violation_error = res.error;
      break;
    }
    PlyRecord rec;
    rec.ply = ply;
    rec.player = p;
    rec.move = m;
    if (p == Player::alice && m.is_paint) {
      rec.quota_used = state.green_count_at(m.target.length());
    }
    rec.coincidence = state.win_by_coincidence();
    if (rec.coincidence && !trace.first_coincidence) {
      trace.first_coincidence = rec.coincidence;
    }
    trace.plies.push_back(std::move(rec));
  }
  trace.diagnostic = state.lexfirst_green_diagnostic(diagnostic_depth);
  return trace;
}

}  // namespace aitgl
