// Command-line front door: reproducible experiments over the toy machine,
// the leaf-trimming construction, the token labeler, and the painting game.
// Every subcommand writes a JSON-lines trace and prints a short summary.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "aitgl/complexity.hpp"
#include "aitgl/game.hpp"
#include "aitgl/serialize.hpp"
#include "aitgl/toy_machine.hpp"
#include "aitgl/trimmer.hpp"

namespace {

using nlohmann::json;
using namespace aitgl;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBreach = 2;

std::filesystem::path trace_path(const std::string& out, const std::string& fallback) {
  if (!out.empty()) return out;
  const char* dir = std::getenv("AITGL_TRACE_DIR");
  return std::filesystem::path(dir ? dir : ".") / fallback;
}

std::ofstream open_trace(const std::filesystem::path& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw CLI::ValidationError("--out", "cannot open " + path.string());
  return f;
}

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// deterministic across platforms, unlike std::shuffle
void seeded_shuffle(std::vector<BitString>& items, std::uint64_t seed) {
  std::uint64_t state = seed;
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = splitmix64(state) % i;
    std::swap(items[i - 1], items[j]);
  }
}

StringSet read_string_set(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw CLI::ValidationError("--input", "cannot open " + path);
  json arr = json::parse(f);
  return string_set_from_json(arr);
}

std::vector<BitString> read_chain_from_trace(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw CLI::ValidationError("--seq", "cannot open " + path);
  std::string line;
  std::vector<BitString> chain;
  bool found = false;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    json rec = json::parse(line);
    if (!rec.contains("diagnostic")) continue;
    found = true;
    chain.clear();
    for (const auto& s : rec["diagnostic"]["chain"]) {
      chain.push_back(*BitString::parse(s.get<std::string>()));
    }
  }
  if (!found) throw CLI::ValidationError("--seq", "no diagnostic record in " + path);
  return chain;
}

int cmd_enumerate(std::uint64_t k, std::uint64_t budget, std::uint64_t max_len,
                  const std::string& out) {
  StringSet s = enumerate_S(k, budget, max_len);
  auto path = trace_path(out, "enumerate.jsonl");
  auto f = open_trace(path);
  for (const BitString& x : s.members()) {
    f << json{{"s", x.str()}, {"len", x.length()}}.dump() << "\n";
  }
  f << json{{"summary",
             {{"k", k}, {"budget", budget}, {"max_len", max_len},
              {"count", s.size()}, {"width", width_of(s, max_len)}}}}
           .dump()
    << "\n";
  std::cout << "S(k=" << k << "): " << s.size() << " strings, width "
            << width_of(s, max_len) << ", trace " << path.string() << "\n";
  return kExitOk;
}

int cmd_trim(std::uint64_t w, std::uint64_t depth, std::uint64_t horizon,
             std::int64_t from_machine, const std::string& from_file,
             std::uint64_t budget, const std::string& out) {
  std::vector<BitString> enumeration;
  if (from_machine >= 0) {
    StringSet s = enumerate_S(static_cast<std::uint64_t>(from_machine), budget, depth);
    enumeration = s.members();
  } else {
    enumeration = read_string_set(from_file).members();
  }
  TrimResult result = trim(enumeration, TrimConfig{w, depth, horizon});

  auto path = trace_path(out, "trim.jsonl");
  auto f = open_trace(path);
  for (const BitString& x : result.input.members()) {
    f << json{{"record", "input"}, {"s", x.str()}, {"len", x.length()}}.dump() << "\n";
  }
  for (const TrimDecision& d : result.log) {
    f << json{{"record", "decision"}, {"x", d.x.str()}, {"len", d.x.length()},
              {"included", d.included}, {"acceptable", d.included}}
             .dump()
      << "\n";
  }
  for (const BitString& x : result.T.members()) {
    f << json{{"record", "member"}, {"s", x.str()}, {"len", x.length()}}.dump() << "\n";
  }
  StringSet joint = result.T;
  for (const BitString& x : result.input.members()) joint.insert(x);
  f << json{{"summary",
             {{"w", w}, {"depth", depth}, {"horizon", horizon},
              {"input_size", result.input.size()}, {"t_size", result.T.size()},
              {"leafless", is_leafless(result.T, depth)},
              {"width_T_union_S", width_of(joint, depth)}}}}
           .dump()
    << "\n";
  std::cout << "T: " << result.T.size() << " strings (input " << result.input.size()
            << "), width(T u S) = " << width_of(joint, depth) << ", trace "
            << path.string() << "\n";
  return kExitOk;
}

int cmd_tokens(const std::string& input, std::uint64_t w, const std::string& order,
               const std::string& out) {
  StringSet set = read_string_set(input);
  std::vector<BitString> seq = set.members();
  if (order == "shortlex") {
    std::sort(seq.begin(), seq.end(), ShortlexLess{});
  } else if (order.rfind("shuffle:", 0) == 0) {
    std::sort(seq.begin(), seq.end(), ShortlexLess{});
    seeded_shuffle(seq, std::stoull(order.substr(8)));
  } else if (order != "file") {
    throw CLI::ValidationError("--order", "expected shortlex | file | shuffle:SEED");
  }

  auto path = trace_path(out, "tokens.jsonl");
  auto f = open_trace(path);
  TokenBoard board(w);
  bool breach = false;
  std::string breach_what;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    auto res = board.observe(seq[i]);
    f << to_json(i + 1, seq[i], res.event).dump() << "\n";
    if (res.status == TokenBoard::ObserveResult::Status::duplicate) {
      breach = true;
      breach_what = "duplicate observation at step " + std::to_string(i + 1);
      break;
    }
    if (res.status == TokenBoard::ObserveResult::Status::capacity_exceeded) {
      breach = true;
      breach_what = "token capacity exceeded at step " + std::to_string(i + 1) +
                    " (input is not leafless of width <= w)";
      break;
    }
  }
  json finals = json::array();
  for (const auto& [pos, token] : board.distinguished()) {
    finals.push_back({{"token", token}, {"at", pos.str()}});
  }
  f << json{{"summary",
             {{"w", w}, {"order", order}, {"tokens_used", board.tokens_used()},
              {"final", finals},
              {"breach", breach ? json(breach_what) : json(nullptr)}}}}
           .dump()
    << "\n";
  std::cout << "tokens used: " << board.tokens_used() << "/" << w << ", trace "
            << path.string() << "\n";
  if (breach) {
    std::cerr << "breach: " << breach_what << "\n";
    return kExitBreach;
  }
  return kExitOk;
}

std::unique_ptr<BobStrategy> make_bob(const std::string& spec, std::uint64_t horizon) {
  if (spec == "pass") return std::make_unique<PassBob>();
  if (spec == "copycat") return std::make_unique<CopycatBob>();
  if (spec.rfind("blind:", 0) == 0) {
    return std::make_unique<BlindBob>(std::stoull(spec.substr(6)), horizon);
  }
  if (spec.rfind("file:", 0) == 0) {
    std::ifstream f(spec.substr(5));
    if (!f) throw CLI::ValidationError("--bob", "cannot open " + spec.substr(5));
    std::vector<Move> moves;
    std::string line;
    while (std::getline(f, line)) {
      if (line.empty() || line == "pass") {
        moves.push_back(Move::pass());
      } else if (auto x = BitString::parse(line)) {
        moves.push_back(Move::paint(*x));
      } else {
        throw CLI::ValidationError("--bob", "bad script line: " + line);
      }
    }
    return std::make_unique<ScriptBob>(std::move(moves));
  }
  throw CLI::ValidationError("--bob", "expected pass | copycat | blind:F | file:PATH");
}

int cmd_play(std::uint64_t w, const std::string& bob_spec, std::uint64_t horizon,
             std::uint64_t depth, const std::string& out) {
  AliceStrategy alice(w);
  auto bob = make_bob(bob_spec, horizon);
  GameTrace trace = play(w, alice, *bob, horizon, depth);

  auto path = trace_path(out, "play.jsonl");
  auto f = open_trace(path);
  for (const PlyRecord& rec : trace.plies) f << to_json(rec).dump() << "\n";
  f << json{{"diagnostic", to_json(trace.diagnostic)},
            {"first_coincidence", trace.first_coincidence
                                      ? json(*trace.first_coincidence)
                                      : json(nullptr)},
            {"rule_violation", trace.rule_violation}}
           .dump()
    << "\n";
  std::cout << "played " << trace.plies.size() << " plies; coincidence "
            << (trace.first_coincidence ? std::to_string(*trace.first_coincidence)
                                        : std::string("none"))
            << "; chain consistent to " << trace.diagnostic.consistent_to
            << ", non-red " << trace.diagnostic.non_red_count << "; trace "
            << path.string() << "\n";
  if (trace.rule_violation) {
    std::cerr << "breach: " << trace.violation_error << "\n";
    return kExitBreach;
  }
  return kExitOk;
}

int cmd_estimate(const std::string& seq_spec, const std::string& mode,
                 const std::string& string_arg, std::uint64_t N,
                 std::uint64_t n_lo, std::uint64_t n_hi, std::uint64_t k_max,
                 std::uint64_t budget, const std::string& out) {
  Estimate e;
  if (mode == "Minf-str") {
    auto x = BitString::parse(string_arg);
    if (!x) throw CLI::ValidationError("--string", "must be over {0,1}");
    if (n_hi < x->length()) throw CLI::ValidationError("--n-hi", "must be >= l(x)");
    e = estimate_Minf_string(*x, n_hi, k_max, budget);
  } else {
    SequenceGen seq;
    if (seq_spec == "zeros") {
      seq = zeros_seq();
    } else if (seq_spec == "alt") {
      seq = alternating_seq();
    } else if (seq_spec.rfind("game-trace:", 0) == 0) {
      seq = chain_seq(read_chain_from_trace(seq_spec.substr(11)));
    } else {
      throw CLI::ValidationError("--seq", "expected zeros | alt | game-trace:PATH");
    }
    std::uint64_t hi = (mode == "M") ? N : n_hi;
    if (seq.max_n && hi > *seq.max_n) {
      throw CLI::ValidationError("--n-hi", "window exceeds the recorded chain");
    }
    if (mode == "M") {
      e = estimate_M(seq, N, k_max, budget);
    } else if (mode == "Minf-seq") {
      e = estimate_Minf_seq(seq, n_lo, n_hi, k_max, budget);
    } else {
      throw CLI::ValidationError("--mode", "expected M | Minf-seq | Minf-str");
    }
  }
  auto path = trace_path(out, "estimate.jsonl");
  auto f = open_trace(path);
  f << to_json(e).dump() << "\n";
  std::cout << "estimate: "
            << (e.value ? std::to_string(*e.value) : std::string("none"))
            << " (window [" << e.n_lo << "," << e.n_hi << "], k_max " << e.k_max
            << "), trace " << path.string() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for budgeted toy-machine complexity, leafless tree "
               "trimming, online path labeling, and the string-painting game"};
  app.require_subcommand(1);

  // enumerate
  std::uint64_t k = 2, budget = 10000, max_len = 8;
  std::string out;
  auto* enumerate = app.add_subcommand("enumerate", "dovetail the toy machine into S");
  enumerate->add_option("--k", k, "program length bound")->required();
  enumerate->add_option("--budget", budget, "step budget");
  enumerate->add_option("--max-len", max_len, "maximum string length")
      ->check(CLI::Range(std::uint64_t{0}, std::uint64_t{64}));
  enumerate->add_option("--out", out, "trace file");

  // trim
  std::uint64_t w = 1, depth = 3, horizon = 10000;
  std::int64_t from_machine = -1;
  std::string from_file;
  auto* trim_cmd = app.add_subcommand("trim", "largest acceptable leafless set");
  trim_cmd->add_option("--w", w, "width bound")
      ->required()->check(CLI::Range(std::uint64_t{1}, std::uint64_t{16}));
  trim_cmd->add_option("--depth", depth, "truncation depth")
      ->required()->check(CLI::Range(std::uint64_t{1}, std::uint64_t{12}));
  trim_cmd->add_option("--horizon", horizon, "enumeration steps of S to consume")
      ->check(CLI::Range(std::uint64_t{0}, std::uint64_t{1000000}));
  trim_cmd->add_option("--from-machine", from_machine, "use S = enumerate_S(k)");
  trim_cmd->add_option("--from-file", from_file, "string-set JSON file");
  trim_cmd->add_option("--budget", budget, "machine step budget");
  trim_cmd->add_option("--out", out, "trace file");

  // tokens
  std::string input, order = "shortlex";
  auto* tokens = app.add_subcommand("tokens", "replay a set through the token board");
  tokens->add_option("--input", input, "string-set JSON file")->required();
  tokens->add_option("--w", w, "token capacity")
      ->required()->check(CLI::Range(std::uint64_t{1}, std::uint64_t{16}));
  tokens->add_option("--order", order, "shortlex | file | shuffle:SEED");
  tokens->add_option("--out", out, "trace file");

  // play
  std::string bob_spec = "pass";
  auto* play_cmd = app.add_subcommand("play", "referee the painting game");
  play_cmd->add_option("--w", w, "Alice per-length quota")
      ->required()->check(CLI::Range(std::uint64_t{1}, std::uint64_t{16}));
  play_cmd->add_option("--bob", bob_spec, "pass | copycat | blind:F | file:PATH");
  play_cmd->add_option("--horizon", horizon, "number of plies")
      ->required()->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1000000}));
  play_cmd->add_option("--depth", depth, "diagnostic depth")
      ->check(CLI::Range(std::uint64_t{0}, std::uint64_t{10000}));
  play_cmd->add_option("--out", out, "trace file");

  // estimate
  std::string seq_spec = "zeros", mode = "M", string_arg;
  std::uint64_t N = 8, n_lo = 1, n_hi = 8, k_max = 20;
  auto* estimate = app.add_subcommand("estimate", "budgeted complexity estimators");
  estimate->add_option("--seq", seq_spec, "zeros | alt | game-trace:PATH");
  estimate->add_option("--mode", mode, "M | Minf-seq | Minf-str")->required();
  estimate->add_option("--string", string_arg, "the string for Minf-str");
  estimate->add_option("--n", N, "range bound for mode M");
  estimate->add_option("--n-lo", n_lo, "window start");
  estimate->add_option("--n-hi", n_hi, "window end");
  estimate->add_option("--k-max", k_max, "program length cap");
  estimate->add_option("--budget", budget, "step budget");
  estimate->add_option("--out", out, "trace file");

  try {
    app.parse(argc, argv);
    if (enumerate->parsed()) return cmd_enumerate(k, budget, max_len, out);
    if (trim_cmd->parsed()) {
      if ((from_machine >= 0) == !from_file.empty()) {
        throw CLI::ValidationError("--from-machine",
                                   "give exactly one of --from-machine / --from-file");
      }
      return cmd_trim(w, depth, horizon, from_machine, from_file, budget, out);
    }
    if (tokens->parsed()) return cmd_tokens(input, w, order, out);
    if (play_cmd->parsed()) return cmd_play(w, bob_spec, horizon, depth, out);
    if (estimate->parsed()) {
      return cmd_estimate(seq_spec, mode, string_arg, N, n_lo, n_hi, k_max, budget, out);
    }
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
