#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "aitgl/bitstring.hpp"
#include "aitgl/toy_machine.hpp"

namespace aitgl {

// A prefix-monotone rule n -> length-n prefix. max_n bounds the domain for
// generators backed by finite data (e.g. a recorded game chain).
struct SequenceGen {
  std::string name;
  std::function<BitString(std::uint64_t)> at;
  std::optional<std::uint64_t> max_n;
};

SequenceGen zeros_seq();
SequenceGen alternating_seq();  // 0101...
// chain[i] must have length i; gen(n) = chain[n]
SequenceGen chain_seq(std::vector<BitString> chain);

// Budgeted upper bound on a prefix-complexity measure, together with the
// program witnessing it.
struct Estimate {
  std::optional<std::uint64_t> value;
  std::optional<ToyProgram> witness;
  std::optional<std::uint64_t> witness_n;
  std::uint64_t n_lo = 0, n_hi = 0;
  std::uint64_t k_max = 0, budget = 0;
};

// max over 1 <= n <= N of min_program_length(seq(n), n); none if any term
// exceeds k_max
Estimate estimate_M(const SequenceGen& seq, std::uint64_t N, std::uint64_t k_max,
                    std::uint64_t budget);

// limsup proxy: max over the window [N_lo, N_hi]
Estimate estimate_Minf_seq(const SequenceGen& seq, std::uint64_t N_lo,
                           std::uint64_t N_hi, std::uint64_t k_max,
                           std::uint64_t budget);

// liminf proxy for a fixed string: min over the tail window
// [ceil(N_hi/2), N_hi] of min_program_length(x, n)
Estimate estimate_Minf_string(const BitString& x, std::uint64_t N_hi,
                              std::uint64_t k_max, std::uint64_t budget);

}  // namespace aitgl
