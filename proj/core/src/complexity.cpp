#include "aitgl/complexity.hpp"

#include <memory>
#include <stdexcept>
#include <utility>

namespace aitgl {

SequenceGen zeros_seq() {
  return {"zeros", [](std::uint64_t n) { return BitString::zeros(n); }, std::nullopt};
}

SequenceGen alternating_seq() {
  return {"alt",
          [](std::uint64_t n) {
            std::string s;
            s.reserve(n);
            for (std::uint64_t i = 0; i < n; ++i) s.push_back(i % 2 ? '1' : '0');
            return *BitString::parse(s);
          },
          std::nullopt};
}

SequenceGen chain_seq(std::vector<BitString> chain) {
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (chain[i].length() != i) throw std::invalid_argument("chain[i] must have length i");
    if (i > 0 && !chain[i - 1].is_proper_prefix_of(chain[i])) {
      throw std::invalid_argument("chain must be prefix-monotone");
    }
  }
  std::uint64_t max_n = chain.empty() ? 0 : chain.size() - 1;
  auto data = std::make_shared<std::vector<BitString>>(std::move(chain));
  return {"chain", [data](std::uint64_t n) { return (*data)[n]; }, max_n};
}

namespace {

Estimate window_max(const SequenceGen& seq, std::uint64_t n_lo, std::uint64_t n_hi,
                    std::uint64_t k_max, std::uint64_t budget) {
  Estimate e;
  e.n_lo = n_lo;
  e.n_hi = n_hi;
  e.k_max = k_max;
  e.budget = budget;
  for (std::uint64_t n = n_lo; n <= n_hi; ++n) {
    auto r = min_program_length(seq.at(n), n, k_max, budget);
    if (!r.length) {
      e.value.reset();
      e.witness.reset();
      e.witness_n.reset();
      return e;
    }
    if (!e.value || *r.length > *e.value) {
      e.value = r.length;
      e.witness = r.witness;
      e.witness_n = n;
    }
  }
  return e;
}

}  // namespace

Estimate estimate_M(const SequenceGen& seq, std::uint64_t N, std::uint64_t k_max,
                    std::uint64_t budget) {
  return window_max(seq, 1, N, k_max, budget);
}

Estimate estimate_Minf_seq(const SequenceGen& seq, std::uint64_t N_lo,
                           std::uint64_t N_hi, std::uint64_t k_max,
                           std::uint64_t budget) {
  return window_max(seq, N_lo, N_hi, k_max, budget);
}

Estimate estimate_Minf_string(const BitString& x, std::uint64_t N_hi,
                              std::uint64_t k_max, std::uint64_t budget) {
  Estimate e;
  e.n_lo = (N_hi + 1) / 2;
  e.n_hi = N_hi;
  e.k_max = k_max;
  e.budget = budget;
  for (std::uint64_t n = e.n_lo; n <= e.n_hi; ++n) {
    auto r = min_program_length(x, n, k_max, budget);
    if (!r.length) continue;  // exceeds k_max at this n; the min ignores it
    if (!e.value || *r.length < *e.value) {
      e.value = r.length;
      e.witness = r.witness;
      e.witness_n = n;
    }
  }
  return e;
}

}  // namespace aitgl
