#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "aitgl/bitstring.hpp"
#include "aitgl/string_set.hpp"

namespace aitgl {

// The reference machine TRM-1. A program is a 2-bit mode tag followed by an
// arbitrary payload; programs shorter than 2 bits diverge.
//
//   mode 00  cyclic   payload repeated cyclically, truncated to length n
//                     (empty payload gives 0^n); costs n steps
//   mode 01  pad      first n bits of payload·0^inf; costs n steps
//   mode 10  constant output is the payload, n ignored; costs l(payload)+1
//   mode 11  slow     outputs 1^n after (val(payload)+1)*(n+1)*16 steps,
//                     payload read as a binary numeral, val(empty) = 0
enum class Mode : std::uint8_t { cyclic = 0, pad = 1, constant = 2, slow_ones = 3 };

struct ToyProgram {
  Mode mode;
  BitString payload;
  BitString raw;  // mode bits followed by the payload

  static std::optional<ToyProgram> parse(const BitString& raw);
  static ToyProgram make(Mode mode, const BitString& payload);
};

struct RunOutcome {
  enum class Kind { output, out_of_budget, invalid_program };
  Kind kind = Kind::invalid_program;
  BitString output;
  std::uint64_t steps = 0;

  bool has_output() const { return kind == Kind::output; }
};

RunOutcome run_program(const ToyProgram& p, std::uint64_t n, std::uint64_t budget);
RunOutcome run_raw(const BitString& raw, std::uint64_t n, std::uint64_t budget);

// Number of steps run_program(p, n, *) needs, or nullopt if it diverges
// (never happens for parsed programs) or overflows the step counter.
std::optional<std::uint64_t> run_cost(const ToyProgram& p, std::uint64_t n);

// Dovetailed enumeration of S = { x : some p with l(p) <= k outputs x on
// input l(x) within `budget` steps }, restricted to l(x) <= max_len.
//
// Order: rounds r = 1,2,...; round r runs every program of length <= k on
// every n <= r with budget r; new members are emitted in shortlex order
// within a round. Equivalently, x is emitted at round max(n, cost) and ties
// are broken by shortlex.
StringSet enumerate_S(std::uint64_t k, std::uint64_t budget, std::uint64_t max_len);

struct MinProgramResult {
  std::optional<std::uint64_t> length;
  std::optional<ToyProgram> witness;
};

// Minimum l(p) <= k_max with run_program(p, n, budget) = output(x), or none.
// TRM-1 is simple enough that the minimum is found per mode in closed form;
// tests cross-check against brute force over all programs.
MinProgramResult min_program_length(const BitString& x, std::uint64_t n,
                                    std::uint64_t k_max, std::uint64_t budget);

// All syntactically valid programs with l(raw) <= k, in shortlex order of raw.
std::vector<ToyProgram> all_programs(std::uint64_t k);

// Incremental dovetailer over programs of length <= k: advance_round() runs
// one more round and returns the members of S newly discovered in it, in
// shortlex order. Used by the blind Bob strategy.
class Dovetailer {
 public:
  Dovetailer(std::uint64_t k, std::uint64_t max_len);

  std::uint64_t round() const { return round_; }
  std::vector<BitString> advance_round();

 private:
  std::uint64_t max_len_;
  std::uint64_t round_ = 0;
  std::vector<ToyProgram> programs_;
  // per slow_ones program: next n whose discovery is still pending
  std::vector<std::pair<std::size_t, std::uint64_t>> slow_next_;
  std::set<std::string> discovered_;
  void offer(std::vector<BitString>& out, const BitString& x);
};

}  // namespace aitgl
