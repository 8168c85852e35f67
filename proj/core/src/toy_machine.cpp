#include "aitgl/toy_machine.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace aitgl {

namespace {

constexpr std::uint64_t kSat = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSat / a) return kSat;
  return a * b;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > kSat - b ? kSat : a + b;
}

// payload read as a binary numeral; val(empty) = 0; saturates
std::uint64_t payload_value(const BitString& payload) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < payload.length(); ++i) {
    if (v > (kSat >> 1)) return kSat;
    v = (v << 1) | static_cast<std::uint64_t>(payload.bit(i));
  }
  return v;
}

BitString cyclic_output(const BitString& payload, std::uint64_t n) {
  std::string out;
  out.reserve(n);
  if (payload.empty()) return BitString::zeros(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    out.push_back(payload.bit(i % payload.length()) ? '1' : '0');
  }
  return *BitString::parse(out);
}

BitString pad_output(const BitString& payload, std::uint64_t n) {
  std::string out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    out.push_back(i < payload.length() && payload.bit(i) ? '1' : '0');
  }
  return *BitString::parse(out);
}

}  // namespace

std::optional<ToyProgram> ToyProgram::parse(const BitString& raw) {
  if (raw.length() < 2) return std::nullopt;
  ToyProgram p;
  p.mode = static_cast<Mode>(raw.bit(0) * 2 + raw.bit(1));
  p.payload = *BitString::parse(raw.str().substr(2));
  p.raw = raw;
  return p;
}

ToyProgram ToyProgram::make(Mode mode, const BitString& payload) {
  auto m = static_cast<int>(mode);
  BitString raw = BitString().append(m >> 1).append(m & 1).concat(payload);
  return *parse(raw);
}

std::optional<std::uint64_t> run_cost(const ToyProgram& p, std::uint64_t n) {
  switch (p.mode) {
    case Mode::cyclic:
    case Mode::pad:
      return n;
    case Mode::constant:
      return p.payload.length() + 1;
    case Mode::slow_ones:
      return sat_mul(sat_mul(sat_add(payload_value(p.payload), 1), sat_add(n, 1)), 16);
  }
  return std::nullopt;
}

RunOutcome run_program(const ToyProgram& p, std::uint64_t n, std::uint64_t budget) {
  RunOutcome out;
  std::uint64_t cost = run_cost(p, n).value();
  if (cost > budget) {
    out.kind = RunOutcome::Kind::out_of_budget;
    return out;
  }
  out.kind = RunOutcome::Kind::output;
  out.steps = cost;
  switch (p.mode) {
    case Mode::cyclic:
      out.output = cyclic_output(p.payload, n);
      break;
    case Mode::pad:
      out.output = pad_output(p.payload, n);
      break;
    case Mode::constant:
      out.output = p.payload;
      break;
    case Mode::slow_ones:
      out.output = BitString::ones(n);
      break;
  }
  return out;
}

RunOutcome run_raw(const BitString& raw, std::uint64_t n, std::uint64_t budget) {
  auto p = ToyProgram::parse(raw);
  if (!p) {
    RunOutcome out;
    out.kind = RunOutcome::Kind::invalid_program;
    return out;
  }
  return run_program(*p, n, budget);
}

std::vector<ToyProgram> all_programs(std::uint64_t k) {
  std::vector<ToyProgram> out;
  for (std::uint64_t len = 2; len <= k; ++len) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << len); ++code) {
      std::string raw(len, '0');
      for (std::uint64_t i = 0; i < len; ++i) {
        if (code & (std::uint64_t{1} << (len - 1 - i))) raw[i] = '1';
      }
      out.push_back(*ToyProgram::parse(*BitString::parse(raw)));
    }
  }
  return out;
}

StringSet enumerate_S(std::uint64_t k, std::uint64_t budget, std::uint64_t max_len) {
  // discovery round of x = min over witnesses (p, n=l(x)) of max(1, n, cost)
  std::map<std::string, std::uint64_t> round_of;
  for (const ToyProgram& p : all_programs(k)) {
    for (std::uint64_t n = 0; n <= max_len; ++n) {
      std::uint64_t cost = run_cost(p, n).value();
      if (cost > budget) continue;
      RunOutcome r = run_program(p, n, budget);
      if (r.output.length() != n) continue;  // constant mode off its own length
      std::uint64_t round = std::max<std::uint64_t>({1, n, cost});
      auto [it, fresh] = round_of.emplace(r.output.str(), round);
      if (!fresh && round < it->second) it->second = round;
    }
  }
  std::vector<std::pair<std::uint64_t, BitString>> ordered;
  ordered.reserve(round_of.size());
  for (const auto& [s, round] : round_of) {
    ordered.emplace_back(round, *BitString::parse(s));
  }
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) {
                     if (a.first != b.first) return a.first < b.first;
                     return shortlex_compare(a.second, b.second) < 0;
                   });
  StringSet s;
  for (const auto& [round, x] : ordered) s.insert(x);
  return s;
}

MinProgramResult min_program_length(const BitString& x, std::uint64_t n,
                                    std::uint64_t k_max, std::uint64_t budget) {
  MinProgramResult best;
  auto consider = [&](const ToyProgram& p) {
    std::uint64_t len = p.raw.length();
    if (len > k_max) return;
    if (run_cost(p, n).value() > budget) return;
    if (!best.length || len < *best.length) {
      best.length = len;
      best.witness = p;
    }
  };

  // constant mode works for every n
  consider(ToyProgram::make(Mode::constant, x));

  if (x.length() == n) {
    // cyclic: shortest period d with x[i] == x[i mod d]; empty payload is 0^n
    if (x == BitString::zeros(n)) {
      consider(ToyProgram::make(Mode::cyclic, BitString()));
    }
    for (std::uint64_t d = 1; d <= n; ++d) {
      bool ok = true;
      for (std::uint64_t i = d; i < n && ok; ++i) ok = x.bit(i) == x.bit(i % d);
      if (ok) {
        consider(ToyProgram::make(Mode::cyclic, x.prefix(d)));
        break;
      }
    }
    // pad: payload is x without trailing zeros
    std::size_t last_one = 0;
    for (std::size_t i = 0; i < x.length(); ++i) {
      if (x.bit(i)) last_one = i + 1;
    }
    consider(ToyProgram::make(Mode::pad, x.prefix(last_one)));
    // slow_ones: empty payload is the cheapest and shortest
    if (x == BitString::ones(n)) {
      consider(ToyProgram::make(Mode::slow_ones, BitString()));
    }
  }
  return best;
}

Dovetailer::Dovetailer(std::uint64_t k, std::uint64_t max_len)
    : max_len_(max_len), programs_(all_programs(k)) {
  for (std::size_t i = 0; i < programs_.size(); ++i) {
    if (programs_[i].mode == Mode::slow_ones) slow_next_.emplace_back(i, 0);
  }
}

void Dovetailer::offer(std::vector<BitString>& out, const BitString& x) {
  if (discovered_.insert(x.str()).second) out.push_back(x);
}

std::vector<BitString> Dovetailer::advance_round() {
  std::uint64_t r = ++round_;
  std::vector<BitString> fresh;
  for (const ToyProgram& p : programs_) {
    switch (p.mode) {
      case Mode::cyclic:
      case Mode::pad: {
        // cost n: input n becomes runnable exactly at round n (round 1 covers n = 0)
        if (r == 1) offer(fresh, run_program(p, 0, r).output);
        if (r <= max_len_) offer(fresh, run_program(p, r, r).output);
        break;
      }
      case Mode::constant: {
        std::uint64_t n = p.payload.length();
        if (n <= max_len_ && r == std::max<std::uint64_t>({1, n, n + 1})) {
          offer(fresh, p.payload);
        }
        break;
      }
      case Mode::slow_ones:
        break;  // handled below via per-program cursors
    }
  }
  for (auto& [idx, next_n] : slow_next_) {
    const ToyProgram& p = programs_[idx];
    while (next_n <= max_len_) {
      std::uint64_t cost = run_cost(p, next_n).value();
      if (std::max(cost, next_n) > r) break;
      offer(fresh, BitString::ones(next_n));
      ++next_n;
    }
  }
  std::sort(fresh.begin(), fresh.end(), ShortlexLess{});
  return fresh;
}

}  // namespace aitgl
