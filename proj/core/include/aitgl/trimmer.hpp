#pragma once

#include <cstdint>
#include <vector>

#include "aitgl/bitstring.hpp"
#include "aitgl/string_set.hpp"

namespace aitgl {

struct TrimConfig {
  std::uint64_t w = 1;        // width bound, >= 1
  std::uint64_t depth = 1;    // truncation length, >= 1
  std::uint64_t horizon = 0;  // how many enumeration steps of S to consume
};

// Is there a truncated-leafless set R including E with width(R u S_j) <= w?
//
// The search space is the canonical one: above the maximal member length of
// E u S_j every candidate continues by appending zeros, so only the levels up
// to that length are enumerated. All members of E and S_j must have length
// <= depth.
bool acceptable_at(const StringSet& E, const StringSet& S_j, std::uint64_t w,
                   std::uint64_t depth);

// The order-largest time-j-acceptable set restricted to length <= depth,
// computed by shortlex-greedy inclusion.
StringSet largest_acceptable_at(const StringSet& S_j, std::uint64_t w,
                                std::uint64_t depth);

struct TrimDecision {
  BitString x;
  bool included;
};

struct TrimResult {
  StringSet input;  // the snapshot S_horizon actually used
  StringSet T;
  std::vector<TrimDecision> log;
};

// Processes all strings of length <= depth in shortlex order, including each
// one iff the running set stays acceptable against the final snapshot
// S_horizon (by monotonicity of S_j, acceptability at the last time index
// decides acceptability at all j <= horizon).
TrimResult trim(const std::vector<BitString>& enumeration, const TrimConfig& cfg);

}  // namespace aitgl
