#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "aitgl/bitstring.hpp"
#include "aitgl/toy_machine.hpp"

namespace aitgl {

enum class Player { alice, bob };

struct Move {
  bool is_paint = false;
  BitString target;

  static Move pass() { return {}; }
  static Move paint(const BitString& x) { return {true, x}; }
};

// Referee state of the string-painting game: Alice paints green under a
// per-length quota of w distinct strings, Bob paints red unconstrained.
class GameState {
 public:
  explicit GameState(std::uint64_t w) : w_(w) {}

  struct ApplyResult {
    bool ok = true;
    std::string error;
    std::optional<std::uint64_t> violated_length;  // quota break, if any
  };

  // Repainting an already-owned string is a no-op and consumes no quota.
  ApplyResult apply(Player p, const Move& m);

  std::uint64_t quota() const { return w_; }
  Player turn() const { return turn_; }

  bool is_green(const BitString& x) const;
  bool is_red(const BitString& x) const;
  std::uint64_t green_count_at(std::uint64_t len) const;
  std::uint64_t red_count_at(std::uint64_t len) const;
  std::uint64_t max_green_length() const { return max_green_length_; }

  // win condition (1): smallest n with at least w doubly painted strings of
  // length n, if any
  std::optional<std::uint64_t> win_by_coincidence() const;

  // smallest length n >= root length with at least `need` doubly painted
  // strings of length n extending `root`
  std::optional<std::uint64_t> coincidence_in_subtree(const BitString& root,
                                                      std::uint64_t need) const;

  struct Diagnostic {
    std::vector<BitString> chain;   // lex-first green selections forming a chain
    std::uint64_t non_red_count = 0;
    std::int64_t consistent_to = -1;  // largest chained length, -1 if none
  };

  // Finite-horizon proxy for win condition (2): the chain of lex-first green
  // strings per length, followed while it stays a child-chain from length 0.
  Diagnostic lexfirst_green_diagnostic(std::uint64_t depth) const;

  const std::map<std::uint64_t, std::set<std::string>>& green_by_length() const {
    return green_;
  }
  const std::map<std::uint64_t, std::set<std::string>>& red_by_length() const {
    return red_;
  }

 private:
  std::uint64_t w_;
  Player turn_ = Player::alice;
  std::map<std::uint64_t, std::set<std::string>> green_, red_;
  std::map<std::uint64_t, std::set<std::string>> both_;  // green intersect red
  std::uint64_t max_green_length_ = 0;
};

// Lemma-3 recursive Alice strategy: the 1-strategy walks the zero chain under
// its root; the (w+1)-strategy paints its root, runs the w-strategy under
// root·1, and on each inner first-way win extends the zero chain past every
// painted length and restarts the inner strategy under the next 0^m·1.
class AliceStrategy {
 public:
  explicit AliceStrategy(std::uint64_t w);

  Move next(const GameState& state);

  // which strategy instance painted which string; run_id 0 is the outermost
  struct PaintRecord {
    int run_id;
    int parent_run_id;  // -1 for the outermost
    BitString target;
  };
  const std::vector<PaintRecord>& paint_log() const { return *paint_log_; }

 private:
  AliceStrategy(std::uint64_t w, BitString root,
                std::shared_ptr<std::vector<PaintRecord>> log, int run_id,
                int parent_run_id, int* next_run_id);

  Move record(const BitString& target);

  std::uint64_t w_;
  BitString root_;
  bool root_painted_ = false;
  std::uint64_t zero_run_ = 0;  // w == 1: bits appended below root so far
  std::unique_ptr<AliceStrategy> inner_;
  std::uint64_t chain_len_ = 0;  // current 0^m chain length below root
  std::deque<BitString> pending_;

  std::shared_ptr<std::vector<PaintRecord>> paint_log_;
  int run_id_;
  int parent_run_id_;
  int* next_run_id_;
  int owned_next_run_id_ = 1;  // storage for the outermost instance
};

class BobStrategy {
 public:
  virtual ~BobStrategy() = default;
  virtual Move next(const GameState& state) = 0;
};

class PassBob : public BobStrategy {
 public:
  Move next(const GameState&) override { return Move::pass(); }
};

// Repaints the shortlex-first green string that is not yet red.
class CopycatBob : public BobStrategy {
 public:
  Move next(const GameState& state) override;
};

// Paints x of length n once a TRM-1 program p with l(p) < f and p(n) = x is
// found, dovetailing one round per turn when idle.
class BlindBob : public BobStrategy {
 public:
  BlindBob(std::uint64_t f, std::uint64_t max_len);
  Move next(const GameState& state) override;

 private:
  Dovetailer dovetailer_;
  std::deque<BitString> queue_;
  bool exhausted_ = false;
};

// Plays a fixed move list, then passes forever.
class ScriptBob : public BobStrategy {
 public:
  explicit ScriptBob(std::vector<Move> moves) : moves_(std::move(moves)) {}
  Move next(const GameState& state) override;

 private:
  std::vector<Move> moves_;
  std::size_t cursor_ = 0;
};

struct PlyRecord {
  std::uint64_t ply;
  Player player;
  Move move;
  std::optional<std::uint64_t> quota_used;  // Alice's quota at the painted length
  std::optional<std::uint64_t> coincidence;  // win condition (1) after the move
};

struct GameTrace {
  std::vector<PlyRecord> plies;
  std::optional<std::uint64_t> first_coincidence;
  GameState::Diagnostic diagnostic;
  bool rule_violation = false;
  std::string violation_error;
};

// Alternates Alice/Bob (Alice first) for `horizon` plies through the referee
// and reports the final lex-first-green diagnostic at `diagnostic_depth`.
GameTrace play(std::uint64_t w, AliceStrategy& alice, BobStrategy& bob,
               std::uint64_t horizon, std::uint64_t diagnostic_depth);

}  // namespace aitgl
